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

#ifndef GENCO_REDUCE_HPP_
#define GENCO_REDUCE_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "genco/core.hpp"

namespace genco {

/// Reorders per-type data so that position r holds the entry of the type the
/// ranking places r-th. Solvers then work under the identity ranking.
std::vector<double> canonicalize(std::span<const double> values,
                                 const Ranking& ranking);
ValueVector canonicalize(const ValueVector& d, const Ranking& ranking);

/// Inverse of canonicalize: maps position-ordered data back to type order.
std::vector<double> decanonicalize(std::span<const double> ranked,
                                   const Ranking& ranking);

struct PavaResult {
  std::vector<double> reduced;
  /// Half-open [begin, end) index ranges, one per pooled block.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::vector<double> mean_of_block;
};

/// Pool-adjacent-violators: replaces every weakly increasing run by its
/// mean until the sequence is weakly decreasing.
PavaResult pava_reduce(std::span<const double> d);
ValueVector pava_reduced(const ValueVector& d);

}  // namespace genco

#endif  // GENCO_REDUCE_HPP_
