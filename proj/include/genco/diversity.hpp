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

#ifndef GENCO_DIVERSITY_HPP_
#define GENCO_DIVERSITY_HPP_

#include <cstddef>
#include <span>

namespace genco {

struct MajorizationVerdict {
  bool majorizes = false;
  /// Smallest prefix-sum slack sum_{l<=k} p_l - q_l over all k.
  double worst_prefix_gap = 0.0;
  /// 1-based prefix length where the smallest slack occurs.
  std::size_t at_prefix = 0;
};

/// Does p majorize q (p is at most as diverse as q)? Both vectors are taken
/// in the order given; no re-sorting happens.
MajorizationVerdict majorizes(std::span<const double> p,
                              std::span<const double> q, double tol = 1e-9);

/// Shannon entropy in nats with 0 log 0 = 0.
double shannon_entropy(std::span<const double> p);

/// Gini coefficient sum_{i,j} |p_i - p_j| / (2 K sum_i p_i).
double gini(std::span<const double> p);

}  // namespace genco

#endif  // GENCO_DIVERSITY_HPP_
