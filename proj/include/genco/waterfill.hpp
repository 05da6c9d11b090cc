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

// Ordered water-filling.
//
// Given per-type marginal values f_k(p), each nonincreasing in p (strictly
// so unless identically zero), finds p on the simplex with
// p_1 >= p_2 >= ... >= p_K such that f_k(p_k) equals a common level c on
// every block of tied positive entries (block means for pooled types) and
// f_k(0) <= c where p_k = 0. This is the first-order system for maximizing
// sum_k F_k(p_k) with F_k' = f_k over the ordered simplex, which covers the
// symmetric equilibrium (f = d u), the symmetric optimum (f = d g or
// d (1-p)^(n-1)) and group responses against a fixed background.
//
// Inputs are in ranked order; callers canonicalize beforehand.

#ifndef GENCO_WATERFILL_HPP_
#define GENCO_WATERFILL_HPP_

#include <functional>
#include <span>
#include <vector>

namespace genco {

struct TypeMarginal {
  std::function<double(double)> value;
  /// Optional closed-form or specialised inverse: the p in [0, 1] with
  /// value(p) = c, clamped at the ends.
  std::function<double(double)> inverse;
  /// value(0); a type with zero marginal never receives mass.
  double at_zero = 0.0;
};

struct WaterfillResult {
  std::vector<double> probs;
  double level = 0.0;
  int iterations = 0;
};

struct WaterfillOptions {
  /// Entries below this are snapped to zero and the rest renormalized.
  double snap = 1e-12;
  int max_iterations = 400;
};

/// Throws std::invalid_argument when every marginal is zero at p = 0.
WaterfillResult ordered_waterfill(std::span<const TypeMarginal> marginals,
                                  const WaterfillOptions& options = {});

/// Strategy mass at a fixed level c (before normalization). Exposed for
/// tests of the monotone structure.
std::vector<double> waterfill_at_level(std::span<const TypeMarginal> marginals,
                                       double level);

}  // namespace genco

#endif  // GENCO_WATERFILL_HPP_
