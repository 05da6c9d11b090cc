// Copyright 2026 The genco Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference implementations used only by tests. None of these
// call into the library's numerical kernels.

#ifndef GENCO_TESTS_ORACLES_HPP_
#define GENCO_TESTS_ORACLES_HPP_

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

// 1/s(x) for s = x^gamma, with gamma = inf meaning 1{x <= 1}.
inline double share(double gamma, long x) {
  if (x <= 1) return 1.0;
  if (std::isinf(gamma)) return 0.0;
  return std::pow(static_cast<double>(x), -gamma);
}

inline double choose(long n, long k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (long i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / i;
  return r;
}

// E[1/s(1 + Bin(m, p))] by direct summation.
inline double u(double gamma, long m, double p) {
  double total = 0.0;
  for (long l = 0; l <= m; ++l) {
    total += choose(m, l) * std::pow(p, l) * std::pow(1 - p, m - l) *
             share(gamma, l + 1);
  }
  return total;
}

// Enumerates every joint outcome of independent categorical players.
// visit(types chosen, probability).
inline void enumerate_outcomes(
    const std::vector<std::vector<double>>& columns,
    const std::function<void(const std::vector<int>&, double)>& visit) {
  std::vector<int> pick(columns.size(), 0);
  std::function<void(std::size_t, double)> rec = [&](std::size_t i, double prob) {
    if (prob == 0.0) return;
    if (i == columns.size()) {
      visit(pick, prob);
      return;
    }
    for (std::size_t k = 0; k < columns[i].size(); ++k) {
      pick[i] = static_cast<int>(k);
      rec(i + 1, prob * columns[i][k]);
    }
  };
  rec(0, 1.0);
}

// Player i's expected utility by full enumeration.
inline double utility(const std::vector<std::vector<double>>& columns,
                      std::size_t i, const std::vector<double>& d,
                      double gamma) {
  double total = 0.0;
  enumerate_outcomes(columns, [&](const std::vector<int>& pick, double prob) {
    long same = 0;
    for (int t : pick) same += t == pick[i];
    total += prob * d[pick[i]] * share(gamma, same);
  });
  return total;
}

// Welfare by enumeration: served demand for the up branch, coverage for the
// down branch.
inline double welfare(const std::vector<std::vector<double>>& columns,
                      const std::vector<double>& d, double gamma, bool up) {
  double total = 0.0;
  enumerate_outcomes(columns, [&](const std::vector<int>& pick, double prob) {
    std::vector<long> count(d.size(), 0);
    for (int t : pick) ++count[t];
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (count[k] == 0) continue;
      total += prob * d[k] *
               (up ? static_cast<double>(count[k]) * share(gamma, count[k]) : 1.0);
    }
  });
  return total;
}

// Rosenthal potential by enumeration.
inline double potential(const std::vector<std::vector<double>>& columns,
                        const std::vector<double>& d, double gamma) {
  double total = 0.0;
  enumerate_outcomes(columns, [&](const std::vector<int>& pick, double prob) {
    std::vector<long> count(d.size(), 0);
    for (int t : pick) ++count[t];
    for (std::size_t k = 0; k < d.size(); ++k) {
      for (long l = 1; l <= count[k]; ++l) total += prob * d[k] * share(gamma, l);
    }
  });
  return total;
}

// Average over all ordered n-draws without replacement from `labels` of the
// first draw's payoff validity / s(1 + collisions).
inline double without_replacement(const std::vector<int>& labels,
                                  const std::vector<double>& validity, long n,
                                  double gamma) {
  std::vector<bool> used(labels.size(), false);
  std::vector<int> drawn;
  double total = 0.0;
  double count = 0.0;
  std::function<void()> rec = [&] {
    if (static_cast<long>(drawn.size()) == n) {
      long same = 0;
      for (int t : drawn) same += t == drawn[0];
      total += validity[drawn[0]] * share(gamma, same);
      count += 1.0;
      return;
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      drawn.push_back(labels[i]);
      rec();
      drawn.pop_back();
      used[i] = false;
    }
  };
  rec();
  return total / count;
}

// Deviator draws from `dev`; each group draws its count without replacement
// from its own pool, all pools disjoint.
inline double cross_enumeration(const std::vector<int>& dev,
                                const std::vector<double>& validity,
                                const std::vector<std::vector<int>>& pools,
                                const std::vector<long>& counts, double gamma) {
  // Per pool: distribution of how many of each label get drawn, via
  // enumeration of ordered draws.
  std::vector<std::vector<std::pair<std::vector<long>, double>>> outcomes;
  const std::size_t labels = validity.size();
  for (std::size_t g = 0; g < pools.size(); ++g) {
    std::vector<std::pair<std::vector<long>, double>> out;
    std::vector<bool> used(pools[g].size(), false);
    std::vector<long> tally(labels, 0);
    double draws = 0.0;
    std::function<void(long)> rec = [&](long left) {
      if (left == 0) {
        out.emplace_back(tally, 1.0);
        draws += 1.0;
        return;
      }
      for (std::size_t i = 0; i < pools[g].size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        ++tally[pools[g][i]];
        rec(left - 1);
        --tally[pools[g][i]];
        used[i] = false;
      }
    };
    rec(counts[g]);
    for (auto& o : out) o.second /= draws;
    outcomes.push_back(std::move(out));
  }
  double total = 0.0;
  for (int mine : dev) {
    std::function<void(std::size_t, long, double)> rec = [&](std::size_t g,
                                                             long same,
                                                             double prob) {
      if (g == outcomes.size()) {
        total += prob * validity[mine] * share(gamma, same + 1);
        return;
      }
      for (const auto& [tally, p] : outcomes[g]) rec(g + 1, same + tally[mine], prob * p);
    };
    rec(0, 0, 1.0);
  }
  return total / static_cast<double>(dev.size());
}

}  // namespace oracle

#endif  // GENCO_TESTS_ORACLES_HPP_
