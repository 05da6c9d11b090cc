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

// Ranking-stability distances between answer distributions.

#ifndef GENCO_DISTANCE_HPP_
#define GENCO_DISTANCE_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "genco/empirical.hpp"

namespace genco {

struct IsotonicFit {
  std::vector<double> fitted;
  double loss = 0.0;  // sum |fitted - target|
};

/// Nonincreasing L1 isotonic regression via PAVA on block medians. An even
/// block uses the mean of its two middle values.
IsotonicFit isotonic_l1_fit(std::span<const double> target);

/// Weighted inversion: total-variation distance from p' to the closest
/// vector that is nonincreasing along the ranking of p. Positions tied in p
/// carry no ordering between them. The closest vector need not sum to 1.
double wi(std::span<const double> p, std::span<const double> p_prime);

double wi_avg(std::span<const double> p, std::span<const double> q);

using DistanceLabel = std::pair<std::string, std::string>;  // tool, variant

/// dist[label][instance]: distribution over that instance's response set,
/// or nullopt when the cell is missing.
struct DistributionSet {
  std::vector<DistanceLabel> labels;
  std::vector<std::string> instances;
  std::vector<std::vector<std::optional<std::vector<double>>>> dist;
};

/// Builds per-instance response sets from the answers seen at least
/// `min_count` times across all cells of the instance, and renormalizes
/// each cell over that set. The tau column serves as the variant.
DistributionSet build_distributions(std::span<const SampleSet> samples,
                                    long min_count = 10,
                                    std::vector<std::string>* warnings = nullptr);

struct DistanceMatrix {
  std::vector<DistanceLabel> labels;
  std::vector<std::vector<double>> d;
  std::size_t instances = 0;
};

/// D_ij = mean over instances of wi_avg. Throws naming the first missing cell.
DistanceMatrix distance_matrix(const DistributionSet& set);

/// CSV with a "tool/variant" label header row and column.
std::string to_csv(const DistanceMatrix& m);

}  // namespace genco

#endif  // GENCO_DISTANCE_HPP_
