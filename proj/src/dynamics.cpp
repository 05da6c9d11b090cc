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

#include "genco/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "genco/solve.hpp"

namespace genco {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double total = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) total += a[k] * b[k];
  return total;
}

void require_player(const StrategyProfile& profile, std::size_t player) {
  if (player >= profile.players()) {
    throw std::out_of_range("player index out of range");
  }
}

void require_table(const ScoreFunction& s, std::size_t n) {
  if (auto top = s.max_arg(); top && static_cast<long>(n) > *top) {
    throw std::invalid_argument("score table shorter than the player count");
  }
}

// Served demand attributed to a type produced c times: c / s(c) for the up
// class, 1{c > 0} for the down class.
double served(const ScoreFunction& s, bool up, std::size_t c) {
  if (c == 0) return 0.0;
  return up ? static_cast<double>(c) * s.reciprocal(static_cast<long>(c)) : 1.0;
}

double expected_served(const CountDistribution& x, const ScoreFunction& s,
                       bool up, std::size_t shift) {
  double total = 0.0;
  for (std::size_t c = 0; c < x.pmf.size(); ++c) {
    total += x.pmf[c] * served(s, up, c + shift);
  }
  return total;
}

}  // namespace

CountDistribution pb_pmf(std::span<const double> probabilities) {
  std::vector<double> pmf{1.0};
  pmf.reserve(probabilities.size() + 1);
  for (double p : probabilities) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("pb_pmf: probability outside [0, 1]");
    }
    pmf.push_back(0.0);
    for (std::size_t c = pmf.size() - 1; c > 0; --c) {
      pmf[c] = pmf[c] * (1.0 - p) + pmf[c - 1] * p;
    }
    pmf[0] *= 1.0 - p;
  }
  return CountDistribution{std::move(pmf)};
}

CountDistribution convolve(const CountDistribution& a,
                           const CountDistribution& b) {
  std::vector<double> out(a.pmf.size() + b.pmf.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.pmf.size(); ++i) {
    if (a.pmf[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.pmf.size(); ++j) {
      out[i + j] += a.pmf[i] * b.pmf[j];
    }
  }
  return CountDistribution{std::move(out)};
}

std::vector<CountDistribution> type_counts(const StrategyProfile& profile,
                                           std::size_t excluded) {
  const std::size_t types = profile.columns.at(0).size();
  std::vector<CountDistribution> counts;
  counts.reserve(types);
  std::vector<double> column;
  for (std::size_t k = 0; k < types; ++k) {
    column.clear();
    for (std::size_t j = 0; j < profile.players(); ++j) {
      if (j != excluded) column.push_back(profile.columns[j][k]);
    }
    counts.push_back(pb_pmf(column));
  }
  return counts;
}

std::vector<double> conditional_values(const StrategyProfile& profile,
                                       std::size_t player, const ValueVector& d,
                                       const ScoreFunction& s) {
  require_player(profile, player);
  require_table(s, profile.players());
  auto counts = type_counts(profile, player);
  std::vector<double> values(d.size(), 0.0);
  for (std::size_t k = 0; k < d.size(); ++k) {
    double share = 0.0;
    const auto& pmf = counts[k].pmf;
    for (std::size_t c = 0; c < pmf.size(); ++c) {
      share += pmf[c] * s.reciprocal(static_cast<long>(c) + 1);
    }
    values[k] = d[k] * share;
  }
  return values;
}

double utility_of(const StrategyProfile& profile, std::size_t player,
                  const ValueVector& d, const ScoreFunction& s) {
  auto values = conditional_values(profile, player, d, s);
  return dot(profile.columns[player].probs(), values);
}

double welfare_of(const StrategyProfile& profile, const ValueVector& d,
                  const ScoreFunction& s) {
  return welfare_without(profile, profile.players(), d, s);
}

double welfare_without(const StrategyProfile& profile, std::size_t player,
                       const ValueVector& d, const ScoreFunction& s) {
  require_table(s, profile.players());
  const bool up = is_up(classify_score(s));
  auto counts = type_counts(profile, player);
  double total = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    total += d[k] * expected_served(counts[k], s, up, 0);
  }
  return total;
}

double potential(const StrategyProfile& profile, const ValueVector& d,
                 const ScoreFunction& s) {
  require_table(s, profile.players());
  auto counts = type_counts(profile, profile.players());
  // harmonic[m] = sum_{l=1}^{m} 1/s(l)
  std::vector<double> harmonic(profile.players() + 1, 0.0);
  for (std::size_t m = 1; m < harmonic.size(); ++m) {
    harmonic[m] = harmonic[m - 1] + s.reciprocal(static_cast<long>(m));
  }
  double total = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    total += d[k] * dot(counts[k].pmf, harmonic);
  }
  return total;
}

Strategy best_response(const StrategyProfile& profile, std::size_t player,
                       std::span<const Ranking> tools, const ValueVector& d,
                       const ScoreFunction& s) {
  require_player(profile, player);
  auto values = conditional_values(profile, player, d, s);
  return best_prefix_vertex(values, tools[profile.tool_of.at(player)]);
}

BrReport br_dynamics(StrategyProfile start, std::span<const Ranking> tools,
                     const ValueVector& d, const ScoreFunction& s,
                     double epsilon, int max_rounds) {
  check_profile(start, tools, d.size());
  BrReport report;
  report.epsilon = epsilon;
  report.profile = std::move(start);
  report.potential_trace.push_back(potential(report.profile, d, s));
  for (int round = 0; round < max_rounds; ++round) {
    ++report.rounds;
    bool switched = false;
    for (std::size_t i = 0; i < report.profile.players(); ++i) {
      auto values = conditional_values(report.profile, i, d, s);
      double current = dot(report.profile.columns[i].probs(), values);
      double best = 0.0;
      Strategy response = best_prefix_vertex(
          values, tools[report.profile.tool_of[i]], &best);
      if (best - current > epsilon) {
        report.profile.columns[i] = std::move(response);
        report.potential_trace.push_back(potential(report.profile, d, s));
        switched = true;
      }
    }
    if (!switched) {
      report.converged = true;
      break;
    }
  }
  return report;
}

EquilibriumReport check_equilibrium(const StrategyProfile& profile,
                                    std::span<const Ranking> tools,
                                    const ValueVector& d,
                                    const ScoreFunction& s, double epsilon) {
  check_profile(profile, tools, d.size());
  EquilibriumReport report;
  report.gains.resize(profile.players());
  for (std::size_t i = 0; i < profile.players(); ++i) {
    auto values = conditional_values(profile, i, d, s);
    double best = 0.0;
    best_prefix_vertex(values, tools[profile.tool_of[i]], &best);
    report.gains[i] = best - dot(profile.columns[i].probs(), values);
    if (i == 0 || report.gains[i] > report.worst_gain) {
      report.worst_gain = report.gains[i];
      report.worst_player = i;
    }
  }
  report.is_equilibrium = report.worst_gain <= epsilon;
  return report;
}

StrategyProfile welfare_ascent(StrategyProfile start,
                               std::span<const Ranking> tools,
                               const ValueVector& d, const ScoreFunction& s,
                               int max_rounds) {
  check_profile(start, tools, d.size());
  require_table(s, start.players() + 1);
  const bool up = is_up(classify_score(s));
  for (int round = 0; round < max_rounds; ++round) {
    bool moved = false;
    for (std::size_t i = 0; i < start.players(); ++i) {
      // Welfare is affine in player i's column with these coefficients.
      auto counts = type_counts(start, i);
      std::vector<double> marginal(d.size());
      for (std::size_t k = 0; k < d.size(); ++k) {
        marginal[k] = d[k] * (expected_served(counts[k], s, up, 1) -
                              expected_served(counts[k], s, up, 0));
      }
      double best = 0.0;
      Strategy candidate =
          best_prefix_vertex(marginal, tools[start.tool_of[i]], &best);
      if (best - dot(start.columns[i].probs(), marginal) > 1e-12) {
        start.columns[i] = std::move(candidate);
        moved = true;
      }
    }
    if (!moved) break;
  }
  return start;
}

Strategy random_strategy(const Ranking& ranking, std::mt19937_64& rng) {
  std::exponential_distribution<double> draw(1.0);
  std::vector<double> mass(ranking.size());
  double total = 0.0;
  for (double& m : mass) {
    m = draw(rng);
    total += m;
  }
  std::sort(mass.begin(), mass.end(), std::greater<>());
  std::vector<double> probs(ranking.size());
  for (std::size_t r = 0; r < ranking.size(); ++r) {
    probs[ranking[r]] = mass[r] / total;
  }
  return Strategy(std::move(probs));
}

TightInstance poa_tight_instance(long n) {
  if (n < 2) throw std::invalid_argument("poa_tight_instance: n must be >= 2");
  const std::size_t types = static_cast<std::size_t>(n * n + 1);
  std::vector<double> d(types, 1.0 / static_cast<double>(n));
  d[0] = 1.0;
  const std::size_t players = static_cast<std::size_t>(n);
  StrategyProfile high = StrategyProfile::symmetric(Strategy::uniform(types),
                                                    players);
  high.columns[0] = Strategy::point_mass(types, 0);
  StrategyProfile eq =
      StrategyProfile::symmetric(Strategy::point_mass(types, 0), players);
  return TightInstance{ValueVector(std::move(d)), std::move(high),
                       std::move(eq)};
}

PoaReport poa_estimate(long n, const ValueVector& d, const ScoreFunction& s,
                       int starts, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("poa_estimate: n must be >= 1");
  std::mt19937_64 rng(seed);
  const Ranking identity = Ranking::identity(d.size());
  const std::vector<Ranking> tools{identity};
  const std::size_t players = static_cast<std::size_t>(n);

  auto random_profile = [&] {
    StrategyProfile p;
    for (std::size_t i = 0; i < players; ++i) {
      p.columns.push_back(random_strategy(identity, rng));
      p.tool_of.push_back(0);
    }
    return p;
  };

  PoaReport report;
  StrategyProfile sym_opt =
      StrategyProfile::symmetric(solve_opt(n, d, s).strategy, players);
  report.opt_welfare = welfare_of(sym_opt, d, s);
  report.opt_welfare = std::max(
      report.opt_welfare,
      welfare_of(welfare_ascent(sym_opt, tools, d, s), d, s));
  for (int t = 0; t < starts; ++t) {
    auto ascended = welfare_ascent(random_profile(), tools, d, s);
    report.opt_welfare = std::max(report.opt_welfare, welfare_of(ascended, d, s));
  }
  BrReport br = br_dynamics(random_profile(), tools, d, s);
  report.eq_converged = br.converged;
  report.eq_welfare = welfare_of(br.profile, d, s);
  report.ratio = report.opt_welfare / report.eq_welfare;
  return report;
}

}  // namespace genco
