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

#ifndef GENCO_CORE_HPP_
#define GENCO_CORE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "genco/score.hpp"

namespace genco {

/// Absolute tolerance used for probability-vector invariants.
inline constexpr double kProbTol = 1e-9;

/// Nonnegative per-type values d_k. At least one entry is positive.
class ValueVector {
 public:
  explicit ValueVector(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  std::span<const double> values() const { return values_; }
  double max() const;
  bool is_weakly_decreasing() const;

 private:
  std::vector<double> values_;
};

/// A permutation of {0..K-1}. Position r holds the type ranked r-th.
class Ranking {
 public:
  explicit Ranking(std::vector<std::size_t> order);

  static Ranking identity(std::size_t k);
  /// Builds from the 1-based form used in files and on the command line.
  static Ranking from_one_based(std::span<const long> order);

  std::size_t size() const { return order_.size(); }
  std::size_t operator[](std::size_t rank) const { return order_[rank]; }
  std::span<const std::size_t> order() const { return order_; }
  /// position(k) is the rank of type k.
  std::size_t position(std::size_t type) const { return position_[type]; }
  std::vector<long> one_based() const;

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
};

/// A probability vector over K types.
class Strategy {
 public:
  explicit Strategy(std::vector<double> probs, double tol = kProbTol);

  static Strategy point_mass(std::size_t k, std::size_t type);
  static Strategy uniform(std::size_t k);
  /// Uniform over the first `length` types of `ranking`.
  static Strategy prefix_uniform(const Ranking& ranking, std::size_t length);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t k) const { return probs_[k]; }
  std::span<const double> probs() const { return probs_; }

  /// True when probabilities are nonincreasing along `ranking` within `tol`.
  bool in_polytope(const Ranking& ranking, double tol = kProbTol) const;

 private:
  std::vector<double> probs_;
};

/// Strategies of all n players plus the tool each player uses.
struct StrategyProfile {
  std::vector<Strategy> columns;
  std::vector<std::size_t> tool_of;

  std::size_t players() const { return columns.size(); }
  /// All players on tool 0 with the same strategy.
  static StrategyProfile symmetric(const Strategy& p, std::size_t n);
};

/// Maximizes sum_k probs_k values_k over the ranking's order polytope. The
/// optimum is uniform over a prefix of the ranking; ties go to the shortest
/// prefix. `best` receives the attained value when non-null.
Strategy best_prefix_vertex(std::span<const double> values,
                            const Ranking& ranking, double* best = nullptr);

/// Throws std::invalid_argument unless every column lies in the polytope of
/// its player's tool ranking.
void check_profile(const StrategyProfile& profile,
                   std::span<const Ranking> tools, std::size_t num_types);

/// Raw game description as supplied by a user; validated separately so that
/// every violation can be reported at once.
struct GameInstance {
  long n = 0;
  std::vector<double> d;
  ScoreFunction score = ScoreFunction::identity();
  std::vector<std::vector<long>> rankings;  // 1-based
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_instance(const GameInstance& g);

}  // namespace genco

#endif  // GENCO_CORE_HPP_
