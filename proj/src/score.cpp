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

#include "genco/score.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace genco {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kShapeTol = 1e-12;

}  // namespace

ScoreFunction ScoreFunction::power(double gamma) {
  if (std::isnan(gamma) || gamma <= 0.0) {
    throw std::invalid_argument("score exponent gamma must be positive");
  }
  return ScoreFunction(Kind::kPower, gamma, {});
}

ScoreFunction ScoreFunction::bertrand() { return power(kInf); }

ScoreFunction ScoreFunction::table(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("score table must supply at least s(1)");
  }
  for (double v : values) {
    if (!(v > 0.0)) {
      throw std::invalid_argument("score table entries must be positive");
    }
  }
  return ScoreFunction(Kind::kTable, std::numeric_limits<double>::quiet_NaN(),
                       std::move(values));
}

bool ScoreFunction::is_infinite() const {
  return kind_ == Kind::kPower && std::isinf(gamma_);
}

std::optional<long> ScoreFunction::max_arg() const {
  if (kind_ == Kind::kTable) return static_cast<long>(table_.size());
  return std::nullopt;
}

double ScoreFunction::operator()(long x) const {
  if (x < 0) throw std::out_of_range("score argument must be nonnegative");
  if (x <= 1) return x == 0 ? 1.0 : (kind_ == Kind::kTable ? table_[0] : 1.0);
  if (kind_ == Kind::kTable) {
    if (x > static_cast<long>(table_.size())) {
      std::ostringstream msg;
      msg << "score table defined up to " << table_.size() << ", asked for s("
          << x << ")";
      throw std::out_of_range(msg.str());
    }
    return table_[x - 1];
  }
  if (std::isinf(gamma_)) return kInf;
  return std::pow(static_cast<double>(x), gamma_);
}

double ScoreFunction::reciprocal(long x) const {
  if (is_infinite() && x >= 2) return 0.0;
  return 1.0 / (*this)(x);
}

std::string ScoreFunction::describe() const {
  std::ostringstream out;
  if (kind_ == Kind::kPower) {
    if (std::isinf(gamma_)) {
      out << "x^inf";
    } else {
      out << "x^" << gamma_;
    }
  } else {
    out << "table[" << table_.size() << "]";
  }
  return out.str();
}

const char* to_string(ScoreClass c) {
  switch (c) {
    case ScoreClass::kUp:
      return "S_up";
    case ScoreClass::kDown:
      return "S_down";
    case ScoreClass::kBoth:
      return "both";
  }
  return "?";
}

ScoreClass classify_score(const ScoreFunction& s) {
  if (s.kind() == ScoreFunction::Kind::kPower) {
    double g = s.gamma();
    if (g == 1.0) return ScoreClass::kBoth;
    return g < 1.0 ? ScoreClass::kUp : ScoreClass::kDown;
  }

  const auto& t = s.table_values();
  const long n_max = static_cast<long>(t.size());
  if (std::abs(t[0] - 1.0) > kShapeTol) {
    throw std::invalid_argument("D.3 violated: s(1) must equal 1");
  }
  for (long x = 1; x < n_max; ++x) {
    if (!(s(x + 1) > s(x))) {
      throw std::invalid_argument("D.1 violated: s is not strictly increasing");
    }
  }
  bool exceeds_one = false;
  for (long x = 1; x <= n_max; ++x) exceeds_one |= s(x) > 1.0;
  if (!exceeds_one) {
    throw std::invalid_argument("D.3 violated: s(x) > 1 for no x");
  }
  for (long x = 1; x + 2 <= n_max; ++x) {
    double second = 1.0 / s(x + 2) - 2.0 / s(x + 1) + 1.0 / s(x);
    if (second < -kShapeTol) {
      throw std::invalid_argument("D.2 violated: 1/s is not discrete-convex");
    }
  }

  auto served = [&](long x) { return static_cast<double>(x) / s(x); };
  bool increasing = true;
  bool decreasing = true;
  bool concave = true;
  for (long x = 1; x < n_max; ++x) {
    double diff = served(x + 1) - served(x);
    increasing &= diff >= -kShapeTol;
    decreasing &= diff <= kShapeTol;
  }
  for (long x = 1; x + 2 <= n_max; ++x) {
    concave &= served(x + 2) - 2.0 * served(x + 1) + served(x) <= kShapeTol;
  }
  bool up = increasing && concave;
  if (up && decreasing) return ScoreClass::kBoth;
  if (up) return ScoreClass::kUp;
  if (decreasing) return ScoreClass::kDown;
  throw std::invalid_argument(
      "D.4 violated: x/s(x) is neither increasing-concave nor decreasing");
}

std::vector<double> binomial_pmf(long m, double p) {
  if (m < 0) throw std::invalid_argument("binomial size must be nonnegative");
  std::vector<double> pmf(static_cast<std::size_t>(m) + 1, 0.0);
  if (p <= 0.0) {
    pmf[0] = 1.0;
    return pmf;
  }
  if (p >= 1.0) {
    pmf[m] = 1.0;
    return pmf;
  }
  const double q = 1.0 - p;
  if (m <= 60) {
    // C(m, l) p^l q^(m-l) built up from the l = 0 term.
    double coef = 1.0;
    for (long l = 0; l <= m; ++l) {
      pmf[l] = coef * std::pow(p, static_cast<double>(l)) *
               std::pow(q, static_cast<double>(m - l));
      coef = coef * static_cast<double>(m - l) / static_cast<double>(l + 1);
    }
    return pmf;
  }
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double lg_m = std::lgamma(static_cast<double>(m) + 1.0);
  for (long l = 0; l <= m; ++l) {
    double log_coef = lg_m - std::lgamma(static_cast<double>(l) + 1.0) -
                      std::lgamma(static_cast<double>(m - l) + 1.0);
    pmf[l] = std::exp(log_coef + static_cast<double>(l) * log_p +
                      static_cast<double>(m - l) * log_q);
  }
  return pmf;
}

double u(const ScoreFunction& s, long m, double p) {
  if (m < 0) throw std::invalid_argument("u: m must be nonnegative");
  if (s.is_infinite()) {
    return std::pow(1.0 - p, static_cast<double>(m));
  }
  if (auto top = s.max_arg(); top && m + 1 > *top) {
    throw std::out_of_range("u: score table too short for m competitors");
  }
  auto pmf = binomial_pmf(m, p);
  double total = 0.0;
  for (long l = 0; l <= m; ++l) total += pmf[l] * s.reciprocal(1 + l);
  return total;
}

double inv_u(const ScoreFunction& s, long m, double y) {
  if (m < 1) throw std::invalid_argument("inv_u: m must be at least 1");
  if (y >= 1.0) return 0.0;
  if (y <= u(s, m, 1.0)) return 1.0;
  double lo = 0.0;  // u(lo) > y
  double hi = 1.0;  // u(hi) < y
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    double mid = 0.5 * (lo + hi);
    if (u(s, m, mid) > y) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double w(const ScoreFunction& s, long n, double p) {
  if (n < 1) throw std::invalid_argument("w: n must be at least 1");
  return static_cast<double>(n) * p * u(s, n - 1, p);
}

double marginal_g(const ScoreFunction& s, long m, double p) {
  if (!is_up(classify_score(s))) {
    throw std::invalid_argument(
        "marginal_g: score function is not in the increasing-concave class");
  }
  if (m < 0) throw std::invalid_argument("marginal_g: m must be nonnegative");
  if (auto top = s.max_arg(); top && m + 1 > *top) {
    throw std::out_of_range("marginal_g: score table too short");
  }
  auto served = [&](long x) {
    return x == 0 ? 0.0 : static_cast<double>(x) * s.reciprocal(x);
  };
  auto pmf = binomial_pmf(m, p);
  double total = 0.0;
  for (long l = 0; l <= m; ++l) {
    total += pmf[l] * (served(l + 1) - served(l));
  }
  return total;
}

}  // namespace genco
