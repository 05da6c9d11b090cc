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

#include "genco/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace genco {

MajorizationVerdict majorizes(std::span<const double> p,
                              std::span<const double> q, double tol) {
  if (p.size() != q.size() || p.empty()) {
    throw std::invalid_argument("majorizes: dimension mismatch");
  }
  MajorizationVerdict verdict;
  double prefix_p = 0.0;
  double prefix_q = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    prefix_p += p[k];
    prefix_q += q[k];
    double gap = prefix_p - prefix_q;
    if (k == 0 || gap < verdict.worst_prefix_gap) {
      verdict.worst_prefix_gap = gap;
      verdict.at_prefix = k + 1;
    }
  }
  verdict.majorizes = verdict.worst_prefix_gap >= -tol;
  return verdict;
}

double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

double gini(std::span<const double> p) {
  if (p.empty()) throw std::invalid_argument("gini: empty vector");
  // Sorted form: sum_{i,j} |x_i - x_j| = 2 sum_i (2i - K + 1) x_(i).
  std::vector<double> sorted(p.begin(), p.end());
  std::sort(sorted.begin(), sorted.end());
  const double k = static_cast<double>(sorted.size());
  double weighted = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    weighted += (2.0 * static_cast<double>(i) - k + 1.0) * sorted[i];
  }
  double total = std::accumulate(sorted.begin(), sorted.end(), 0.0);
  if (!(total > 0.0)) return 0.0;
  return weighted / (k * total);
}

}  // namespace genco
