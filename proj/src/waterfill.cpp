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

#include "genco/waterfill.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace genco {

namespace {

// Common value p for the pooled positions [begin, end) at level c: the root
// of sum_k f_k(p) = (end - begin) c, clamped to [0, 1].
double solve_block(std::span<const TypeMarginal> f, std::size_t begin,
                   std::size_t end, double level) {
  const double width = static_cast<double>(end - begin);
  double at_zero = 0.0;
  for (std::size_t k = begin; k < end; ++k) at_zero += f[k].at_zero;
  if (at_zero <= level * width) return 0.0;
  if (end - begin == 1 && f[begin].inverse) {
    return std::clamp(f[begin].inverse(level), 0.0, 1.0);
  }
  auto excess = [&](double p) {
    double total = 0.0;
    for (std::size_t k = begin; k < end; ++k) total += f[k].value(p);
    return total - level * width;
  };
  if (excess(1.0) >= 0.0) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 80 && hi - lo > 1e-16; ++it) {
    double mid = 0.5 * (lo + hi);
    if (excess(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> waterfill_at_level(std::span<const TypeMarginal> marginals,
                                       double level) {
  struct Block {
    std::size_t begin;
    std::size_t end;
    double value;
  };
  std::vector<Block> stack;
  stack.reserve(marginals.size());
  for (std::size_t k = 0; k < marginals.size(); ++k) {
    stack.push_back({k, k + 1, solve_block(marginals, k, k + 1, level)});
    while (stack.size() > 1 &&
           stack[stack.size() - 2].value < stack.back().value) {
      Block top = stack.back();
      stack.pop_back();
      Block& prev = stack.back();
      prev.end = top.end;
      prev.value = solve_block(marginals, prev.begin, prev.end, level);
    }
  }
  std::vector<double> probs(marginals.size(), 0.0);
  for (const Block& b : stack) {
    std::fill(probs.begin() + static_cast<std::ptrdiff_t>(b.begin),
              probs.begin() + static_cast<std::ptrdiff_t>(b.end), b.value);
  }
  return probs;
}

WaterfillResult ordered_waterfill(std::span<const TypeMarginal> marginals,
                                  const WaterfillOptions& options) {
  if (marginals.empty()) throw std::invalid_argument("waterfill: no types");
  double top = 0.0;
  for (const auto& f : marginals) top = std::max(top, f.at_zero);
  if (!(top > 0.0)) {
    throw std::invalid_argument("waterfill: no type has positive value");
  }

  auto mass = [&](double level) {
    auto p = waterfill_at_level(marginals, level);
    return std::pair{std::accumulate(p.begin(), p.end(), 0.0), std::move(p)};
  };

  WaterfillResult result;
  double lo = 1e-12 * top;  // mass(lo) >= 1 in all non-degenerate cases
  double hi = top;          // mass(hi) == 0
  auto [lo_mass, lo_probs] = mass(lo);
  if (lo_mass >= 1.0) {
    while (result.iterations < options.max_iterations &&
           hi - lo > 1e-15 * top) {
      ++result.iterations;
      double mid = 0.5 * (lo + hi);
      auto [m, p] = mass(mid);
      if (m >= 1.0) {
        lo = mid;
        lo_mass = m;
        lo_probs = std::move(p);
      } else {
        hi = mid;
      }
    }
  }

  result.level = lo;
  result.probs = std::move(lo_probs);
  double total = 0.0;
  for (double& p : result.probs) {
    if (p < options.snap) p = 0.0;
    total += p;
  }
  if (!(total > 0.0)) {
    // Every type saturates at zero marginal; fall back to the top-ranked type.
    result.probs.assign(marginals.size(), 0.0);
    result.probs[0] = 1.0;
    return result;
  }
  for (double& p : result.probs) p /= total;
  return result;
}

}  // namespace genco
