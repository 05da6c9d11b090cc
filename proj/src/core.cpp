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

#include "genco/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace genco {

ValueVector::ValueVector(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("value vector must have at least one type");
  }
  bool any_positive = false;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k]) || values_[k] < 0.0) {
      std::ostringstream msg;
      msg << "negative or non-finite value at index " << k + 1;
      throw std::invalid_argument(msg.str());
    }
    any_positive |= values_[k] > 0.0;
  }
  if (!any_positive) {
    throw std::invalid_argument("value vector has no positive entry");
  }
}

double ValueVector::max() const {
  return *std::max_element(values_.begin(), values_.end());
}

bool ValueVector::is_weakly_decreasing() const {
  return std::is_sorted(values_.begin(), values_.end(), std::greater<>());
}

namespace {

// Empty string when `order` is a permutation of {0..K-1}.
std::string permutation_problem(std::span<const long> order, long base) {
  const long k = static_cast<long>(order.size());
  std::vector<bool> seen(order.size(), false);
  for (long v : order) {
    long idx = v - base;
    if (idx < 0 || idx >= k) return "not a permutation (entry out of range)";
    if (seen[idx]) return "not a permutation";
    seen[idx] = true;
  }
  return {};
}

}  // namespace

Ranking::Ranking(std::vector<std::size_t> order) : order_(std::move(order)) {
  std::vector<long> as_long(order_.begin(), order_.end());
  if (auto problem = permutation_problem(as_long, 0); !problem.empty()) {
    throw std::invalid_argument("ranking is " + problem);
  }
  position_.resize(order_.size());
  for (std::size_t r = 0; r < order_.size(); ++r) position_[order_[r]] = r;
}

Ranking Ranking::identity(std::size_t k) {
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return Ranking(std::move(order));
}

Ranking Ranking::from_one_based(std::span<const long> order) {
  if (auto problem = permutation_problem(order, 1); !problem.empty()) {
    throw std::invalid_argument("ranking is " + problem);
  }
  std::vector<std::size_t> zero(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    zero[r] = static_cast<std::size_t>(order[r] - 1);
  }
  return Ranking(std::move(zero));
}

std::vector<long> Ranking::one_based() const {
  std::vector<long> out(order_.size());
  for (std::size_t r = 0; r < order_.size(); ++r) {
    out[r] = static_cast<long>(order_[r]) + 1;
  }
  return out;
}

Strategy::Strategy(std::vector<double> probs, double tol)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("strategy has no types");
  double total = 0.0;
  for (double p : probs_) {
    if (!std::isfinite(p) || p < -tol) {
      throw std::invalid_argument("strategy has a negative probability");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > tol) {
    std::ostringstream msg;
    msg << "strategy sums to " << total << ", not 1";
    throw std::invalid_argument(msg.str());
  }
  for (double& p : probs_) p = std::max(p, 0.0);
}

Strategy Strategy::point_mass(std::size_t k, std::size_t type) {
  std::vector<double> probs(k, 0.0);
  probs.at(type) = 1.0;
  return Strategy(std::move(probs));
}

Strategy Strategy::uniform(std::size_t k) {
  return Strategy(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

Strategy Strategy::prefix_uniform(const Ranking& ranking, std::size_t length) {
  if (length == 0 || length > ranking.size()) {
    throw std::invalid_argument("prefix length out of range");
  }
  std::vector<double> probs(ranking.size(), 0.0);
  for (std::size_t r = 0; r < length; ++r) {
    probs[ranking[r]] = 1.0 / static_cast<double>(length);
  }
  return Strategy(std::move(probs));
}

bool Strategy::in_polytope(const Ranking& ranking, double tol) const {
  if (ranking.size() != probs_.size()) return false;
  for (std::size_t r = 1; r < ranking.size(); ++r) {
    if (probs_[ranking[r]] > probs_[ranking[r - 1]] + tol) return false;
  }
  return true;
}

StrategyProfile StrategyProfile::symmetric(const Strategy& p, std::size_t n) {
  return StrategyProfile{std::vector<Strategy>(n, p),
                         std::vector<std::size_t>(n, 0)};
}

Strategy best_prefix_vertex(std::span<const double> values,
                            const Ranking& ranking, double* best) {
  if (values.size() != ranking.size() || values.empty()) {
    throw std::invalid_argument("best_prefix_vertex: length mismatch");
  }
  double running = 0.0;
  double best_avg = 0.0;
  std::size_t best_len = 0;
  for (std::size_t r = 0; r < ranking.size(); ++r) {
    running += values[ranking[r]];
    double avg = running / static_cast<double>(r + 1);
    // Relative slack keeps exact ties (e.g. equal values) on the shorter
    // prefix despite rounding in the running sum.
    if (best_len == 0 || avg > best_avg + 1e-14 * std::abs(best_avg)) {
      best_avg = avg;
      best_len = r + 1;
    }
  }
  if (best != nullptr) *best = best_avg;
  return Strategy::prefix_uniform(ranking, best_len);
}

void check_profile(const StrategyProfile& profile,
                   std::span<const Ranking> tools, std::size_t num_types) {
  if (profile.columns.empty()) {
    throw std::invalid_argument("profile has no players");
  }
  if (profile.tool_of.size() != profile.columns.size()) {
    throw std::invalid_argument("profile tool assignment has wrong length");
  }
  for (std::size_t i = 0; i < profile.columns.size(); ++i) {
    const Strategy& col = profile.columns[i];
    if (col.size() != num_types) {
      throw std::invalid_argument("profile column has wrong number of types");
    }
    std::size_t tool = profile.tool_of[i];
    if (tool >= tools.size()) {
      throw std::invalid_argument("profile references an unknown tool");
    }
    if (!col.in_polytope(tools[tool])) {
      std::ostringstream msg;
      msg << "player " << i << " strategy violates its tool ranking";
      throw std::invalid_argument(msg.str());
    }
  }
}

ValidationReport validate_instance(const GameInstance& g) {
  ValidationReport report;
  if (g.n < 1) report.violations.push_back("player count n must be at least 1");
  if (g.d.empty()) report.violations.push_back("value vector is empty");
  bool any_positive = false;
  for (std::size_t k = 0; k < g.d.size(); ++k) {
    if (!std::isfinite(g.d[k]) || g.d[k] < 0.0) {
      std::ostringstream msg;
      msg << "negative value at index " << k + 1;
      report.violations.push_back(msg.str());
    }
    any_positive |= g.d[k] > 0.0;
  }
  if (!g.d.empty() && !any_positive) {
    report.violations.push_back("value vector has no positive entry");
  }
  if (g.rankings.empty()) {
    report.violations.push_back("at least one ranking is required");
  }
  for (std::size_t j = 0; j < g.rankings.size(); ++j) {
    const auto& r = g.rankings[j];
    std::ostringstream prefix;
    prefix << "ranking " << j + 1 << ": ";
    if (r.size() != g.d.size()) {
      report.violations.push_back(prefix.str() + "length differs from K");
      continue;
    }
    if (auto problem = permutation_problem(r, 1); !problem.empty()) {
      report.violations.push_back(prefix.str() + problem);
    }
  }
  try {
    classify_score(g.score);
  } catch (const std::invalid_argument& e) {
    report.violations.push_back(std::string("score function: ") + e.what());
  }
  if (auto top = g.score.max_arg(); top && g.n > *top) {
    report.violations.push_back("score table shorter than n");
  }
  return report;
}

}  // namespace genco
