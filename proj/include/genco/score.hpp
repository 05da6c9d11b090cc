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

// Score (congestion) functions and the binomial expectation kernels built
// on them. A player sharing a type with C - 1 others earns d / s(C).

#ifndef GENCO_SCORE_HPP_
#define GENCO_SCORE_HPP_

#include <optional>
#include <string>
#include <vector>

namespace genco {

class ScoreFunction {
 public:
  enum class Kind { kPower, kTable };

  /// s(x) = x^gamma. gamma may be +infinity (winner-takes-all on a unique
  /// answer). Throws std::invalid_argument for gamma <= 0 or NaN.
  static ScoreFunction power(double gamma);
  static ScoreFunction identity() { return power(1.0); }
  static ScoreFunction bertrand();
  /// s(1..n_max) given explicitly; values[0] is s(1).
  static ScoreFunction table(std::vector<double> values);

  Kind kind() const { return kind_; }
  double gamma() const { return gamma_; }
  bool is_infinite() const;
  /// Largest supported argument for table kind.
  std::optional<long> max_arg() const;
  const std::vector<double>& table_values() const { return table_; }

  /// s(x). s(0) = 1 by convention; +inf for the infinite power at x >= 2.
  /// Throws std::out_of_range for a table argument beyond n_max.
  double operator()(long x) const;
  /// 1 / s(x), returning exactly 0 where s is infinite.
  double reciprocal(long x) const;

  std::string describe() const;

 private:
  ScoreFunction(Kind kind, double gamma, std::vector<double> table)
      : kind_(kind), gamma_(gamma), table_(std::move(table)) {}

  Kind kind_;
  double gamma_;
  std::vector<double> table_;
};

enum class ScoreClass { kUp, kDown, kBoth };

inline bool is_up(ScoreClass c) { return c != ScoreClass::kDown; }
inline bool is_down(ScoreClass c) { return c != ScoreClass::kUp; }
const char* to_string(ScoreClass c);

/// Classifies s into the increasing-concave (up) or decreasing (down)
/// served-demand class. Throws std::invalid_argument naming the violated
/// condition when s is not a valid score function.
ScoreClass classify_score(const ScoreFunction& s);

/// Binomial(m, p) probability mass function over {0..m}. Log-space
/// coefficients are used for m > 60.
std::vector<double> binomial_pmf(long m, double p);

/// E[1 / s(1 + X)], X ~ Binomial(m, p).
double u(const ScoreFunction& s, long m, double p);

/// Inverse of p -> u(s, m, p) on [0, 1]. Values at or above 1 map to 0,
/// values at or below u(s, m, 1) map to 1.
double inv_u(const ScoreFunction& s, long m, double y);

/// E[X / s(X)], X ~ Binomial(n, p); equals n p u(s, n - 1, p).
double w(const ScoreFunction& s, long n, double p);

/// E[(1 + X)/s(1 + X) - X/s(X)], X ~ Binomial(m, p): the derivative of
/// p u(s, m, p). Requires s in the up class.
double marginal_g(const ScoreFunction& s, long m, double p);

}  // namespace genco

#endif  // GENCO_SCORE_HPP_
