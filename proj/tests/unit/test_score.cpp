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


#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "genco/score.hpp"
#include "oracles.hpp"

using namespace genco;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

ScoreFunction power_or_inf(double g) {
  return std::isinf(g) ? ScoreFunction::bertrand() : ScoreFunction::power(g);
}

}  // namespace

TEST_CASE("score evaluation") {
  CHECK(ScoreFunction::power(2)(3) == doctest::Approx(9));
  for (double g : {0.25, 0.5, 1.0, 2.0, 7.0}) CHECK(ScoreFunction::power(g)(1) == 1.0);
  CHECK(ScoreFunction::bertrand()(1) == 1.0);
  CHECK(std::isinf(ScoreFunction::bertrand()(2)));
  CHECK(ScoreFunction::bertrand().reciprocal(2) == 0.0);
  CHECK(ScoreFunction::power(3)(0) == 1.0);
  CHECK_THROWS_AS(ScoreFunction::power(0), std::invalid_argument);
  CHECK_THROWS_AS(ScoreFunction::power(-1), std::invalid_argument);
  CHECK_THROWS_AS(ScoreFunction::power(std::nan("")), std::invalid_argument);

  ScoreFunction t = ScoreFunction::table({1, 2, 3});
  CHECK(t(3) == 3);
  CHECK_THROWS_AS(t(4), std::out_of_range);
}

TEST_CASE("table scores must satisfy the score axioms") {
  auto named = [](std::vector<double> t) {
    try {
      classify_score(ScoreFunction::table(std::move(t)));
    } catch (const std::invalid_argument& e) {
      return std::string(e.what()).substr(0, 3);
    }
    return std::string();
  };
  CHECK(named({2, 3}) == "D.3");
  CHECK(named({1, 1, 2}) == "D.1");
  CHECK(named({1, 1.1, 10}) == "D.2");
}

TEST_CASE("classify_score") {
  CHECK(classify_score(ScoreFunction::power(0.5)) == ScoreClass::kUp);
  CHECK(classify_score(ScoreFunction::power(0.25)) == ScoreClass::kUp);
  CHECK(classify_score(ScoreFunction::power(2)) == ScoreClass::kDown);
  CHECK(classify_score(ScoreFunction::power(5)) == ScoreClass::kDown);
  CHECK(classify_score(ScoreFunction::bertrand()) == ScoreClass::kDown);
  CHECK(classify_score(ScoreFunction::power(1)) == ScoreClass::kBoth);
  CHECK(classify_score(ScoreFunction::table({1, 2, 3, 4})) == ScoreClass::kBoth);
  CHECK(classify_score(ScoreFunction::table({1, 4, 9})) == ScoreClass::kDown);
}

TEST_CASE("u kernel") {
  const ScoreFunction id = ScoreFunction::identity();
  CHECK(u(id, 1, 0.8) == doctest::Approx(0.6).epsilon(1e-14));
  for (double g : {0.5, 1.0, 2.0, kInf}) CHECK(u(power_or_inf(g), 5, 0.0) == 1.0);
  CHECK(u(ScoreFunction::bertrand(), 3, 0.5) == doctest::Approx(0.125));
  CHECK(u(id, 0, 0.7) == 1.0);

  SUBCASE("closed form for the identity score") {
    for (long m : {1L, 2L, 5L, 30L, 100L}) {
      for (double p : {0.05, 0.3, 0.77, 1.0}) {
        double closed = (1 - std::pow(1 - p, m + 1)) / ((m + 1) * p);
        CHECK(u(id, m, p) == doctest::Approx(closed).epsilon(1e-11));
      }
    }
  }
  SUBCASE("matches direct summation") {
    for (double g : {0.5, 1.0, 2.0, kInf}) {
      for (long m : {1L, 3L, 9L, 40L}) {
        for (double p : {0.1, 0.5, 0.9}) {
          CHECK(u(power_or_inf(g), m, p) ==
                doctest::Approx(oracle::u(g, m, p)).epsilon(1e-11));
        }
      }
    }
  }
  SUBCASE("large m stays finite and decreasing") {
    const ScoreFunction s = ScoreFunction::power(0.5);
    double prev = 1.0;
    for (double p = 0.01; p <= 1.0; p += 0.07) {
      double v = u(s, 5000, p);
      CHECK(std::isfinite(v));
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("u decreases in m and p") {
  for (double g : {0.25, 0.5, 1.0, 2.0, 5.0, kInf}) {
    ScoreFunction s = power_or_inf(g);
    for (long m = 0; m < 12; ++m) {
      for (double p = 0.05; p < 1.0; p += 0.05) {
        CHECK(u(s, m, p) > u(s, m + 1, p));
        CHECK(u(s, m + 1, p) > u(s, m + 1, p + 0.01));
      }
    }
  }
}

TEST_CASE("inv_u") {
  const ScoreFunction id = ScoreFunction::identity();
  CHECK(inv_u(id, 1, 0.6) == doctest::Approx(0.8).epsilon(1e-10));
  CHECK(inv_u(id, 3, 1.0) == 0.0);
  CHECK(inv_u(id, 1, 0.5) == 1.0);
  CHECK(inv_u(id, 1, 0.2) == 1.0);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double gammas[] = {0.25, 0.5, 1.0, 2.0, 5.0, kInf};
  for (int c = 0; c < 300; ++c) {
    ScoreFunction s = power_or_inf(gammas[c % 6]);
    long m = 1 + static_cast<long>(unit(rng) * 20);
    double p = unit(rng);
    CHECK(inv_u(s, m, u(s, m, p)) == doctest::Approx(p).epsilon(1e-9));
  }
}

TEST_CASE("w kernel") {
  const ScoreFunction id = ScoreFunction::identity();
  CHECK(w(id, 2, 0.4) == doctest::Approx(0.64));
  CHECK(w(ScoreFunction::power(2), 4, 0.0) == 0.0);
  CHECK(w(ScoreFunction::power(0.5), 1, 1.0) == doctest::Approx(1.0));
  for (double g : {0.5, 2.0, kInf}) {
    ScoreFunction s = power_or_inf(g);
    for (long n : {1L, 2L, 6L}) {
      for (double p : {0.2, 0.6}) CHECK(w(s, n, p) == n * p * u(s, n - 1, p));
    }
  }
}

TEST_CASE("marginal_g") {
  const ScoreFunction id = ScoreFunction::identity();
  CHECK(marginal_g(id, 1, 0.4) == doctest::Approx(0.6));
  CHECK(marginal_g(ScoreFunction::power(0.5), 4, 0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(marginal_g(ScoreFunction::power(2), 2, 0.5), std::invalid_argument);

  SUBCASE("finite difference of w / n") {
    const double h = 1e-6;
    for (double g : {0.25, 0.5, 1.0}) {
      ScoreFunction s = ScoreFunction::power(g);
      for (long n : {2L, 3L, 7L}) {
        for (double p : {0.1, 0.5, 0.8}) {
          double fd = (w(s, n, p + h) - w(s, n, p - h)) / (2 * h) / n;
          CHECK(std::abs(marginal_g(s, n - 1, p) - fd) < 1e-5);
        }
      }
    }
  }
  SUBCASE("decreasing in p") {
    ScoreFunction s = ScoreFunction::power(0.5);
    for (double p = 0.0; p < 0.95; p += 0.05) {
      CHECK(marginal_g(s, 4, p) > marginal_g(s, 4, p + 0.05));
    }
  }
}

TEST_CASE("binomial pmf") {
  auto pmf = binomial_pmf(4, 0.5);
  REQUIRE(pmf.size() == 5);
  CHECK(pmf[2] == doctest::Approx(6.0 / 16));
  double total = 0.0;
  for (double v : binomial_pmf(200, 0.37)) total += v;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}
