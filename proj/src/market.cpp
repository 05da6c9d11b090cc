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

#include "genco/market.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "genco/reduce.hpp"
#include "genco/waterfill.hpp"

namespace genco {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double total = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) total += a[k] * b[k];
  return total;
}

// E[1 / s(1 + j + Y)] for j in {0..m-1}.
std::vector<double> shifted_shares(const CountDistribution* y, long m,
                                   const ScoreFunction& s) {
  std::vector<double> h(static_cast<std::size_t>(m), 0.0);
  for (long j = 0; j < m; ++j) {
    if (y == nullptr) {
      h[j] = s.reciprocal(1 + j);
      continue;
    }
    for (std::size_t c = 0; c < y->pmf.size(); ++c) {
      h[j] += y->pmf[c] * s.reciprocal(1 + j + static_cast<long>(c));
    }
  }
  return h;
}

// Value V_k = d_k E[1 / s(1 + Y_k)] of each type against a background.
std::vector<double> values_against(std::span<const CountDistribution> bg,
                                   const ValueVector& d,
                                   const ScoreFunction& s) {
  std::vector<double> v(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    v[k] = d[k] * shifted_shares(&bg[k], 1, s)[0];
  }
  return v;
}

double max_abs_diff(const Strategy& a, const Strategy& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    worst = std::max(worst, std::abs(a[k] - b[k]));
  }
  return worst;
}

// Background seen by one player of tool `j`: the other m_j - 1 players of
// that tool plus every player of the remaining tools.
std::vector<CountDistribution> background_for(const MarketEquilibrium& eq,
                                              std::size_t j) {
  std::vector<CountDistribution> bg;
  for (std::size_t t = 0; t < eq.counts.size(); ++t) {
    long count = t == j ? eq.counts[t] - 1 : eq.counts[t];
    if (count <= 0) continue;
    auto part = group_counts(eq.strategies[t], count);
    if (bg.empty()) {
      bg = std::move(part);
    } else {
      for (std::size_t k = 0; k < bg.size(); ++k) bg[k] = convolve(bg[k], part[k]);
    }
  }
  if (bg.empty()) {
    bg.assign(eq.strategies.at(0).size(), CountDistribution{{1.0}});
  }
  return bg;
}

}  // namespace

std::vector<CountDistribution> group_counts(const Strategy& p, long count) {
  std::vector<CountDistribution> out;
  out.reserve(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    out.push_back(CountDistribution{binomial_pmf(count, p[k])});
  }
  return out;
}

Strategy group_eq_response(long m, const Ranking& ranking,
                           std::span<const CountDistribution> background,
                           const ValueVector& d, const ScoreFunction& s) {
  if (m < 1) throw std::invalid_argument("group size must be at least 1");
  if (ranking.size() != d.size() ||
      (!background.empty() && background.size() != d.size())) {
    throw std::invalid_argument("group_eq_response: dimension mismatch");
  }
  if (auto top = s.max_arg()) {
    long outside = 0;
    for (const auto& b : background) {
      outside = std::max(outside, static_cast<long>(b.max_count()));
    }
    if (m + outside > *top) {
      throw std::invalid_argument("score table shorter than the player count");
    }
  }

  std::vector<std::vector<double>> shares(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) {
    shares[k] = shifted_shares(background.empty() ? nullptr : &background[k],
                               m, s);
  }

  if (m == 1) {
    std::vector<double> v(d.size());
    for (std::size_t k = 0; k < d.size(); ++k) v[k] = d[k] * shares[k][0];
    return best_prefix_vertex(v, ranking);
  }

  std::vector<TypeMarginal> marginals;
  marginals.reserve(d.size());
  bool any_value = false;
  for (std::size_t r = 0; r < ranking.size(); ++r) {
    const std::size_t k = ranking[r];
    const double dk = d[k];
    const std::vector<double>* h = &shares[k];
    TypeMarginal f;
    f.at_zero = dk * (*h)[0];
    any_value |= f.at_zero > 0.0;
    f.value = [dk, h, m](double p) {
      auto pmf = binomial_pmf(m - 1, p);
      double total = 0.0;
      for (std::size_t j = 0; j < pmf.size(); ++j) total += pmf[j] * (*h)[j];
      return dk * total;
    };
    marginals.push_back(std::move(f));
  }
  if (!any_value) {
    std::vector<double> zeros(d.size(), 0.0);
    return best_prefix_vertex(zeros, ranking);
  }
  WaterfillResult wf = ordered_waterfill(marginals);
  return Strategy(decanonicalize(wf.probs, ranking));
}

const char* to_string(SplitStatus status) {
  switch (status) {
    case SplitStatus::kVerified:
      return "verified";
    case SplitStatus::kRejected:
      return "rejected";
    case SplitStatus::kNotConverged:
      return "no equilibrium found (not converged)";
  }
  return "?";
}

double audit_market_equilibrium(const MarketEquilibrium& eq,
                                std::span<const Ranking> tools,
                                const ValueVector& d, const ScoreFunction& s) {
  double worst = 0.0;
  for (std::size_t j = 0; j < eq.counts.size(); ++j) {
    if (eq.counts[j] <= 0) continue;
    auto values = values_against(background_for(eq, j), d, s);
    double current = dot(eq.strategies[j].probs(), values);
    for (const Ranking& tool : tools) {
      double best = 0.0;
      best_prefix_vertex(values, tool, &best);
      worst = std::max(worst, best - current);
    }
  }
  return worst;
}

namespace {

// A single player has many best responses when it is indifferent; keep the
// current strategy in that case so symmetric fixed points are not broken.
Strategy respond(long m, const Ranking& ranking,
                 std::span<const CountDistribution> background,
                 const Strategy& current, const ValueVector& d,
                 const ScoreFunction& s) {
  Strategy next = group_eq_response(m, ranking, background, d, s);
  if (m != 1) return next;
  auto values = values_against(background, d, s);
  if (dot(current.probs(), values) >= dot(next.probs(), values) - 1e-12) {
    return current;
  }
  return next;
}

}  // namespace

MarketSearch find_partial_sym_equilibria(long n, std::span<const Ranking> tools,
                                         const ValueVector& d,
                                         const ScoreFunction& s,
                                         const MarketOptions& options) {
  if (n < 1) throw std::invalid_argument("player count must be at least 1");
  if (tools.empty() || tools.size() > 2) {
    throw std::invalid_argument(
        "market search supports one or two tools; more are out of scope");
  }
  for (const Ranking& t : tools) {
    if (t.size() != d.size()) {
      throw std::invalid_argument("tool ranking length differs from K");
    }
  }

  MarketSearch search;
  const std::size_t num_tools = tools.size();
  for (long m1 = (num_tools == 1 ? n : 0); m1 <= n; ++m1) {
    std::vector<long> counts{m1};
    if (num_tools == 2) counts.push_back(n - m1);

    SplitOutcome outcome;
    outcome.counts = counts;
    std::vector<Strategy> strategies;
    bool converged = true;

    auto active = [&](std::size_t j) { return counts[j] > 0; };
    if (num_tools == 1 || !active(0) || !active(1)) {
      std::size_t j = (num_tools == 1 || active(0)) ? 0 : 1;
      Strategy own = group_eq_response(n, tools[j], {}, d, s);
      strategies.assign(num_tools, own);
      if (num_tools == 2) {
        // Placeholder for the empty tool: what a lone entrant would play.
        strategies[1 - j] =
            group_eq_response(1, tools[1 - j], group_counts(own, n), d, s);
      }
    } else {
      // Start each group at the all-n symmetric equilibrium of its own tool,
      // which is already the fixed point when the tools coincide.
      Strategy p1 = group_eq_response(n, tools[0], {}, d, s);
      Strategy p2 = group_eq_response(n, tools[1], {}, d, s);
      converged = false;
      for (int it = 0; it < options.max_iterations; ++it) {
        ++outcome.iterations;
        Strategy next1 =
            respond(counts[0], tools[0], group_counts(p2, counts[1]), p1, d, s);
        Strategy next2 =
            respond(counts[1], tools[1], group_counts(next1, counts[0]), p2, d, s);
        double delta = std::max(max_abs_diff(next1, p1), max_abs_diff(next2, p2));
        p1 = std::move(next1);
        p2 = std::move(next2);
        if (delta < options.fixed_point_tol) {
          converged = true;
          break;
        }
      }
      strategies = {p1, p2};
    }

    if (!converged) {
      outcome.status = SplitStatus::kNotConverged;
      search.splits.push_back(std::move(outcome));
      continue;
    }

    MarketEquilibrium eq{counts, strategies, std::vector<double>(num_tools, 0.0),
                         0.0};
    for (std::size_t j = 0; j < num_tools; ++j) {
      if (!active(j)) continue;
      auto values = values_against(background_for(eq, j), d, s);
      eq.utilities[j] = dot(eq.strategies[j].probs(), values);
    }
    eq.max_gain = audit_market_equilibrium(eq, tools, d, s);
    outcome.max_gain = eq.max_gain;
    if (eq.max_gain <= options.epsilon) {
      outcome.status = SplitStatus::kVerified;
      search.equilibria.push_back(std::move(eq));
    } else {
      outcome.status = SplitStatus::kRejected;
    }
    search.splits.push_back(std::move(outcome));
  }
  return search;
}

MarketShareReport market_share_bounds(
    std::span<const MarketEquilibrium> equilibria, std::size_t num_tools) {
  MarketShareReport report;
  report.tools.resize(num_tools);
  for (const auto& eq : equilibria) {
    for (std::size_t j = 0; j < num_tools && j < eq.counts.size(); ++j) {
      report.tools[j].shares.insert(eq.counts[j]);
    }
  }
  for (auto& t : report.tools) {
    t.empty = t.shares.empty();
    if (!t.empty) {
      t.share_min = *t.shares.begin();
      t.share_max = *t.shares.rbegin();
    }
  }
  report.note = equilibria.empty()
                    ? "no equilibrium found; share sets are empty"
                    : "constructive search: share sets are bounds on the true "
                      "sets, not a completeness certificate";
  return report;
}

}  // namespace genco
