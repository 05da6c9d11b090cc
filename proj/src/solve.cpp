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

#include "genco/solve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "genco/waterfill.hpp"

namespace genco {

namespace {

// E[h(X)] for X ~ Binomial(m, p) with h tabulated on {0..m}.
double binomial_expectation(const std::vector<double>& h, double p) {
  const long m = static_cast<long>(h.size()) - 1;
  auto pmf = binomial_pmf(m, p);
  double total = 0.0;
  for (long l = 0; l <= m; ++l) total += pmf[l] * h[l];
  return total;
}

SymmetricSolution single_player(const ValueVector& d) {
  double best = 0.0;
  Strategy p = best_prefix_vertex(d.values(), Ranking::identity(d.size()), &best);
  return SymmetricSolution{p, best, best, best};
}

// A lone player's welfare is linear in p, so every maximizing prefix is
// optimal; take the longest, which is the uniform answer for tied values.
SymmetricSolution single_player_opt(const ValueVector& d) {
  double best = 0.0;
  best_prefix_vertex(d.values(), Ranking::identity(d.size()), &best);
  std::size_t length = 1;
  double sum = 0.0;
  for (std::size_t j = 1; j <= d.size(); ++j) {
    sum += d[j - 1];
    if (sum / static_cast<double>(j) >= best - 1e-12) length = j;
  }
  Strategy p = Strategy::prefix_uniform(Ranking::identity(d.size()), length);
  return SymmetricSolution{p, best, best, best};
}

void require_players(long n) {
  if (n < 1) throw std::invalid_argument("player count must be at least 1");
}

}  // namespace

SymmetricSolution solve_eq(long n, const ValueVector& d,
                           const ScoreFunction& s) {
  require_players(n);
  if (n == 1) return single_player(d);
  const long m = n - 1;
  if (auto top = s.max_arg(); top && n > *top) {
    throw std::invalid_argument("score table shorter than n");
  }

  // 1/s(1 + l) for l in {0..m}.
  std::vector<double> share(static_cast<std::size_t>(m) + 1);
  for (long l = 0; l <= m; ++l) share[l] = s.reciprocal(1 + l);

  std::vector<TypeMarginal> marginals;
  marginals.reserve(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double dk = d[k];
    TypeMarginal f;
    f.at_zero = dk;
    if (s.is_infinite()) {
      f.value = [dk, m](double p) {
        return dk * std::pow(1.0 - p, static_cast<double>(m));
      };
    } else {
      f.value = [dk, &share](double p) {
        return dk * binomial_expectation(share, p);
      };
    }
    f.inverse = [dk, m, &s](double c) {
      return dk > 0.0 ? inv_u(s, m, c / dk) : 0.0;
    };
    marginals.push_back(std::move(f));
  }

  WaterfillResult wf = ordered_waterfill(marginals);
  Strategy p(std::move(wf.probs));
  double utility = eval_utility(p, p, n, d, s);
  return SymmetricSolution{p, wf.level, utility, eval_welfare_sym(p, n, d, s)};
}

SymmetricSolution solve_opt(long n, const ValueVector& d,
                            const ScoreFunction& s) {
  require_players(n);
  if (n == 1) return single_player_opt(d);
  const long m = n - 1;
  const ScoreClass cls = classify_score(s);
  if (auto top = s.max_arg(); top && n > *top) {
    throw std::invalid_argument("score table shorter than n");
  }

  // Marginal served demand (1 + l)/s(1 + l) - l/s(l) for l in {0..m}.
  std::vector<double> gain(static_cast<std::size_t>(m) + 1);
  if (is_up(cls)) {
    auto served = [&](long x) {
      return x == 0 ? 0.0 : static_cast<double>(x) * s.reciprocal(x);
    };
    for (long l = 0; l <= m; ++l) gain[l] = served(l + 1) - served(l);
  }

  std::vector<TypeMarginal> marginals;
  marginals.reserve(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double dk = d[k];
    TypeMarginal f;
    f.at_zero = dk;
    if (is_up(cls)) {
      f.value = [dk, &gain](double p) {
        return dk * binomial_expectation(gain, p);
      };
    } else {
      f.value = [dk, m](double p) {
        return dk * std::pow(1.0 - p, static_cast<double>(m));
      };
      f.inverse = [dk, m](double c) {
        if (dk <= 0.0) return 0.0;
        return 1.0 - std::pow(c / dk, 1.0 / static_cast<double>(m));
      };
    }
    marginals.push_back(std::move(f));
  }

  WaterfillResult wf = ordered_waterfill(marginals);
  Strategy p(std::move(wf.probs));
  return SymmetricSolution{p, wf.level, eval_utility(p, p, n, d, s),
                           eval_welfare_sym(p, n, d, s)};
}

double eval_utility(const Strategy& dev, const Strategy& p, long n,
                    const ValueVector& d, const ScoreFunction& s) {
  require_players(n);
  if (dev.size() != d.size() || p.size() != d.size()) {
    throw std::invalid_argument("eval_utility: dimension mismatch");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (dev[k] == 0.0 || d[k] == 0.0) continue;
    total += dev[k] * d[k] * u(s, n - 1, p[k]);
  }
  return total;
}

double eval_welfare_sym(const Strategy& p, long n, const ValueVector& d,
                        const ScoreFunction& s) {
  require_players(n);
  if (p.size() != d.size()) {
    throw std::invalid_argument("eval_welfare_sym: dimension mismatch");
  }
  const bool up = is_up(classify_score(s));
  double total = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 0.0) continue;
    if (up) {
      total += d[k] * w(s, n, p[k]);
    } else {
      total += d[k] * (1.0 - std::pow(1.0 - p[k], static_cast<double>(n)));
    }
  }
  return total;
}

Strategy limit_dist(const ValueVector& d, double gamma) {
  if (!(gamma > 0.0) || std::isinf(gamma)) {
    throw std::invalid_argument("limit_dist: gamma must be positive and finite");
  }
  // d_k^(1/gamma) scaled by max d to stay finite for small gamma.
  const double top = d.max();
  std::vector<double> probs(d.size());
  double total = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    probs[k] = d[k] > 0.0 ? std::exp(std::log(d[k] / top) / gamma) : 0.0;
    total += probs[k];
  }
  for (double& v : probs) v /= total;
  return Strategy(std::move(probs));
}

Strategy limit_dist_uniform(const ValueVector& d, bool* zero_in_support) {
  if (zero_in_support != nullptr) {
    *zero_in_support = std::any_of(d.values().begin(), d.values().end(),
                                   [](double v) { return v == 0.0; });
  }
  return Strategy::uniform(d.size());
}

}  // namespace genco
