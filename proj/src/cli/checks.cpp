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

#include "cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "genco/distance.hpp"
#include "genco/dynamics.hpp"
#include "genco/empirical.hpp"
#include "genco/reduce.hpp"
#include "genco/solve.hpp"

namespace genco::cli {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

long pick(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

ScoreFunction random_score(Rng& rng) {
  static const double gammas[] = {0.5, 1.0, 2.0, INFINITY};
  double g = gammas[pick(rng, 0, 3)];
  return std::isinf(g) ? ScoreFunction::bertrand() : ScoreFunction::power(g);
}

void record(CheckResult& r, double discrepancy, double tol,
            const std::string& what) {
  ++r.cases;
  r.worst = std::max(r.worst, discrepancy);
  if (!(discrepancy <= tol)) {
    if (r.failures++ == 0) r.first_failure = what;
  }
}

// Ordered draws without replacement, each weighted equally.
double enumerate_draws(const std::vector<int>& labels,
                       const std::vector<double>& validity, long n,
                       const ScoreFunction& s) {
  const std::size_t size = labels.size();
  std::vector<std::size_t> chosen;
  std::vector<bool> used(size, false);
  double total = 0.0;
  long count = 0;
  std::function<void()> rec = [&] {
    if (static_cast<long>(chosen.size()) == n) {
      int mine = labels[chosen[0]];
      long same = 0;
      for (std::size_t i = 1; i < chosen.size(); ++i) same += labels[chosen[i]] == mine;
      total += validity[mine] * s.reciprocal(same + 1);
      ++count;
      return;
    }
    for (std::size_t i = 0; i < size; ++i) {
      if (used[i]) continue;
      used[i] = true;
      chosen.push_back(i);
      rec();
      chosen.pop_back();
      used[i] = false;
    }
  };
  rec();
  return total / static_cast<double>(count);
}

}  // namespace

std::vector<CheckResult> run_property_checks(std::uint64_t seed, int cases) {
  Rng rng(seed);
  std::vector<CheckResult> out;

  CheckResult pava{"pava-equivalence"};
  for (int c = 0; c < cases; ++c) {
    const long k = pick(rng, 1, 8);
    const long n = pick(rng, 1, 6);
    std::vector<double> d(static_cast<std::size_t>(k));
    for (double& v : d) v = uniform(rng, 0.0, 1.0);
    ValueVector raw(d);
    ValueVector reduced = pava_reduced(raw);
    ScoreFunction s = random_score(rng);
    double gap = 0.0;
    for (bool eq : {true, false}) {
      auto a = eq ? solve_eq(n, raw, s) : solve_opt(n, raw, s);
      auto b = eq ? solve_eq(n, reduced, s) : solve_opt(n, reduced, s);
      gap = std::max(gap, std::abs(a.per_player_utility - b.per_player_utility));
      gap = std::max(gap, std::abs(a.welfare - b.welfare));
      // A lone player is indifferent inside a pooled block, so the strategy
      // itself is only pinned down for n >= 2.
      if (n == 1) continue;
      for (std::size_t i = 0; i < d.size(); ++i) {
        gap = std::max(gap, std::abs(a.strategy[i] - b.strategy[i]));
      }
    }
    record(pava, gap, 1e-7, "K=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  out.push_back(pava);

  CheckResult pot{"potential-identity"};
  for (int c = 0; c < cases; ++c) {
    const std::size_t k = static_cast<std::size_t>(pick(rng, 1, 5));
    const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 4));
    std::vector<double> d(k);
    for (double& v : d) v = uniform(rng, 0.05, 1.0);
    ValueVector values(d);
    Ranking id = Ranking::identity(k);
    ScoreFunction s = random_score(rng);
    StrategyProfile p;
    for (std::size_t i = 0; i < n; ++i) {
      p.columns.push_back(random_strategy(id, rng));
      p.tool_of.push_back(0);
    }
    std::size_t who = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1));
    StrategyProfile q = p;
    q.columns[who] = random_strategy(id, rng);
    double d_phi = potential(q, values, s) - potential(p, values, s);
    double d_u = utility_of(q, who, values, s) - utility_of(p, who, values, s);
    record(pot, std::abs(d_phi - d_u), 1e-9, "n=" + std::to_string(n));
  }
  out.push_back(pot);

  CheckResult ustat{"ustat-enumeration"};
  for (int c = 0; c < cases; ++c) {
    const long size = pick(rng, 1, 7);
    const int types = static_cast<int>(pick(rng, 1, 4));
    std::vector<int> labels(static_cast<std::size_t>(size));
    for (int& l : labels) l = static_cast<int>(pick(rng, 0, types - 1));
    std::vector<double> validity(static_cast<std::size_t>(types));
    for (double& v : validity) v = static_cast<double>(pick(rng, 0, 1));
    SampleSet set;
    set.tool = "t";
    set.tau = "1";
    set.instance_id = "i";
    for (int t = 0; t < types; ++t) {
      long a = std::count(labels.begin(), labels.end(), t);
      if (a == 0) continue;
      set.answers.push_back("a" + std::to_string(t));
      set.counts.push_back(a);
      set.valid.push_back(validity[t]);
      set.total += a;
    }
    const long n = pick(rng, 1, std::min(4L, size));
    ScoreFunction s = random_score(rng);
    double exact = enumerate_draws(labels, validity, n, s);
    record(ustat, std::abs(exact - ustat_self(set, n, s)), 1e-12,
           "S=" + std::to_string(size) + " n=" + std::to_string(n));
  }
  out.push_back(ustat);

  CheckResult iso{"isotonic-l1"};
  for (int c = 0; c < cases; ++c) {
    const std::size_t k = static_cast<std::size_t>(pick(rng, 1, 5));
    std::vector<double> target(k);
    for (double& v : target) v = uniform(rng, 0.0, 1.0);
    // Some L1 optimum takes values among the targets; enumerate those.
    std::vector<double> levels = target;
    std::sort(levels.begin(), levels.end(), std::greater<>());
    double best = INFINITY;
    std::vector<std::size_t> idx(k, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                             std::size_t from) {
      if (pos == k) {
        double loss = 0.0;
        for (std::size_t i = 0; i < k; ++i) loss += std::abs(levels[idx[i]] - target[i]);
        best = std::min(best, loss);
        return;
      }
      for (std::size_t j = from; j < levels.size(); ++j) {
        idx[pos] = j;
        rec(pos + 1, j);
      }
    };
    rec(0, 0);
    double loss = isotonic_l1_fit(target).loss;
    record(iso, loss - best, 1e-12, "K=" + std::to_string(k));
  }
  out.push_back(iso);

  CheckResult wib{"wi-bounds"};
  for (int c = 0; c < cases; ++c) {
    const std::size_t k = static_cast<std::size_t>(pick(rng, 1, 6));
    Ranking id = Ranking::identity(k);
    Strategy p = random_strategy(id, rng);
    std::vector<double> q(k);
    double total = 0.0;
    for (double& v : q) total += (v = uniform(rng, 0.0, 1.0));
    for (double& v : q) v /= total;
    double a = wi(p.probs(), q);
    double self = wi(q, q);
    double sym = std::abs(wi_avg(p.probs(), q) - wi_avg(q, p.probs()));
    double violation = std::max({-a, a - 1.0, std::abs(self), sym});
    record(wib, std::max(0.0, violation), 1e-12, "K=" + std::to_string(k));
  }
  out.push_back(wib);
  return out;
}

}  // namespace genco::cli
