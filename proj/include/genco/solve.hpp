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

// Symmetric play under a single tool. All functions assume the identity
// ranking: d is given in ranked order (see canonicalize) and returned
// strategies are nonincreasing in index. d need not be decreasing; the
// ranking constraint is enforced directly.

#ifndef GENCO_SOLVE_HPP_
#define GENCO_SOLVE_HPP_

#include "genco/core.hpp"
#include "genco/score.hpp"

namespace genco {

struct SymmetricSolution {
  Strategy strategy;
  /// Equalized per-type value: d_k u(n-1, p_k) for equilibria, the
  /// multiplier on the simplex constraint for optima.
  double level;
  double per_player_utility;
  double welfare;
};

/// Unique symmetric equilibrium of the n-player game. For n = 1 this is the
/// best prefix-uniform vertex (shortest among ties).
SymmetricSolution solve_eq(long n, const ValueVector& d, const ScoreFunction& s);

/// Unique symmetric welfare-maximizing strategy.
SymmetricSolution solve_opt(long n, const ValueVector& d,
                            const ScoreFunction& s);

/// U(dev, p): expected utility of one player using `dev` while the other
/// n - 1 play `p`.
double eval_utility(const Strategy& dev, const Strategy& p, long n,
                    const ValueVector& d, const ScoreFunction& s);

/// Expected welfare when all n players use p. Served-demand form for the up
/// class, coverage form sum_k d_k (1 - (1 - p_k)^n) for the down class.
double eval_welfare_sym(const Strategy& p, long n, const ValueVector& d,
                        const ScoreFunction& s);

/// Large-n limit of the equilibrium under x^gamma: p_k proportional to
/// d_k^(1/gamma). Throws for gamma <= 0 or infinite gamma.
Strategy limit_dist(const ValueVector& d, double gamma);

/// Large-n limit of the down-class optimum: uniform over all K types.
/// `zero_in_support` is set when some d_k = 0 receives mass.
Strategy limit_dist_uniform(const ValueVector& d, bool* zero_in_support);

}  // namespace genco

#endif  // GENCO_SOLVE_HPP_
