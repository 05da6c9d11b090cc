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

#include "genco/reduce.hpp"

#include <stdexcept>

namespace genco {

std::vector<double> canonicalize(std::span<const double> values,
                                 const Ranking& ranking) {
  if (values.size() != ranking.size()) {
    throw std::invalid_argument("canonicalize: length mismatch");
  }
  std::vector<double> out(values.size());
  for (std::size_t r = 0; r < ranking.size(); ++r) out[r] = values[ranking[r]];
  return out;
}

ValueVector canonicalize(const ValueVector& d, const Ranking& ranking) {
  return ValueVector(canonicalize(d.values(), ranking));
}

std::vector<double> decanonicalize(std::span<const double> ranked,
                                   const Ranking& ranking) {
  if (ranked.size() != ranking.size()) {
    throw std::invalid_argument("decanonicalize: length mismatch");
  }
  std::vector<double> out(ranked.size());
  for (std::size_t r = 0; r < ranking.size(); ++r) out[ranking[r]] = ranked[r];
  return out;
}

PavaResult pava_reduce(std::span<const double> d) {
  struct Block {
    double sum;
    std::size_t length;
    double mean() const { return sum / static_cast<double>(length); }
  };
  std::vector<Block> stack;
  stack.reserve(d.size());
  for (double value : d) {
    stack.push_back({value, 1});
    // Equal neighbouring means already satisfy the weak ordering.
    while (stack.size() > 1 &&
           stack[stack.size() - 2].mean() < stack.back().mean()) {
      Block top = stack.back();
      stack.pop_back();
      stack.back().sum += top.sum;
      stack.back().length += top.length;
    }
  }

  PavaResult result;
  result.reduced.reserve(d.size());
  std::size_t begin = 0;
  for (const Block& b : stack) {
    result.blocks.emplace_back(begin, begin + b.length);
    result.mean_of_block.push_back(b.mean());
    result.reduced.insert(result.reduced.end(), b.length, b.mean());
    begin += b.length;
  }
  return result;
}

ValueVector pava_reduced(const ValueVector& d) {
  return ValueVector(pava_reduce(d.values()).reduced);
}

}  // namespace genco
