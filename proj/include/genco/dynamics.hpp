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

// Asymmetric profiles: exact utilities, welfare and potential through
// Poisson-binomial collision counts, best-response dynamics, and
// price-of-anarchy instrumentation.

#ifndef GENCO_DYNAMICS_HPP_
#define GENCO_DYNAMICS_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "genco/core.hpp"
#include "genco/score.hpp"

namespace genco {

/// Distribution of a collision count over {0..n}.
struct CountDistribution {
  std::vector<double> pmf;

  double prob(std::size_t c) const { return c < pmf.size() ? pmf[c] : 0.0; }
  std::size_t max_count() const { return pmf.size() - 1; }
};

/// Exact Poisson-binomial pmf of a sum of independent Bernoulli(p_i).
CountDistribution pb_pmf(std::span<const double> probabilities);

/// Distribution of the sum of two independent counts.
CountDistribution convolve(const CountDistribution& a,
                           const CountDistribution& b);

/// Per-type count of players other than `excluded` producing that type.
/// Pass excluded = players() to count everyone.
std::vector<CountDistribution> type_counts(const StrategyProfile& profile,
                                           std::size_t excluded);

/// V_k = d_k E[1 / s(1 + X_k(others))]: the value of producing type k
/// against the other players.
std::vector<double> conditional_values(const StrategyProfile& profile,
                                       std::size_t player, const ValueVector& d,
                                       const ScoreFunction& s);

double utility_of(const StrategyProfile& profile, std::size_t player,
                  const ValueVector& d, const ScoreFunction& s);

double welfare_of(const StrategyProfile& profile, const ValueVector& d,
                  const ScoreFunction& s);

/// Welfare with player `player` removed from the game.
double welfare_without(const StrategyProfile& profile, std::size_t player,
                       const ValueVector& d, const ScoreFunction& s);

/// Rosenthal potential E[sum_k d_k sum_{l=1}^{X_k} 1/s(l)].
double potential(const StrategyProfile& profile, const ValueVector& d,
                 const ScoreFunction& s);

/// Exact best response of `player` over the polytope of their tool.
Strategy best_response(const StrategyProfile& profile, std::size_t player,
                       std::span<const Ranking> tools, const ValueVector& d,
                       const ScoreFunction& s);

struct BrReport {
  StrategyProfile profile;
  std::vector<double> potential_trace;
  bool converged = false;
  double epsilon = 0.0;
  int rounds = 0;
};

/// Round-robin exact best responses. A player switches only when the best
/// response improves their utility by more than epsilon; stops after a
/// full round without switches or after max_rounds.
BrReport br_dynamics(StrategyProfile start, std::span<const Ranking> tools,
                     const ValueVector& d, const ScoreFunction& s,
                     double epsilon = 1e-8, int max_rounds = 1000);

struct EquilibriumReport {
  bool is_equilibrium = false;
  std::size_t worst_player = 0;
  double worst_gain = 0.0;
  std::vector<double> gains;
};

EquilibriumReport check_equilibrium(const StrategyProfile& profile,
                                    std::span<const Ranking> tools,
                                    const ValueVector& d,
                                    const ScoreFunction& s, double epsilon);

/// Coordinate ascent on welfare: each player in turn moves to the vertex of
/// their polytope maximizing total welfare. Yields a lower bound on the
/// asymmetric optimum.
StrategyProfile welfare_ascent(StrategyProfile start,
                               std::span<const Ranking> tools,
                               const ValueVector& d, const ScoreFunction& s,
                               int max_rounds = 200);

/// Random strategy in the polytope of `ranking` (sorted normalized
/// exponentials, i.e. a sorted flat Dirichlet draw).
Strategy random_strategy(const Ranking& ranking, std::mt19937_64& rng);

struct TightInstance {
  ValueVector d;
  StrategyProfile high_welfare;
  StrategyProfile equilibrium;
};

/// Price-of-anarchy lower-bound family: d = [1, 1/n, ..., 1/n] with
/// K = n^2 + 1 types under the identity score.
TightInstance poa_tight_instance(long n);

struct PoaReport {
  double opt_welfare = 0.0;   // best found; a lower bound on the optimum
  double eq_welfare = 0.0;
  double ratio = 0.0;
  bool eq_converged = false;
};

/// Ratio of the best welfare found (symmetric optimum and coordinate ascent
/// from `starts` random profiles) to the welfare of the profile reached by
/// best-response dynamics from a random profile.
PoaReport poa_estimate(long n, const ValueVector& d, const ScoreFunction& s,
                       int starts, std::uint64_t seed);

}  // namespace genco

#endif  // GENCO_DYNAMICS_HPP_
