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


#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "genco/diversity.hpp"
#include "genco/solve.hpp"

using namespace genco;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

ScoreFunction power_or_inf(double g) {
  return std::isinf(g) ? ScoreFunction::bertrand() : ScoreFunction::power(g);
}

ValueVector random_decreasing(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  std::vector<double> d(1 + rng() % 8);
  for (double& v : d) v = unit(rng);
  std::sort(d.begin(), d.end(), std::greater<>());
  return ValueVector(d);
}

bool schur_consistent(std::span<const double> p, std::span<const double> q) {
  return shannon_entropy(p) <= shannon_entropy(q) + 1e-9 && gini(p) >= gini(q) - 1e-9;
}

}  // namespace

TEST_CASE("majorizes examples") {
  std::vector<double> a{0.8, 0.2}, b{0.6, 0.4};
  auto v = majorizes(a, b);
  CHECK(v.majorizes);
  CHECK(v.worst_prefix_gap == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(majorizes(a, a).worst_prefix_gap == doctest::Approx(0.0));

  std::vector<double> c{0.5, 0.5}, e{0.9, 0.1};
  auto no = majorizes(c, e);
  CHECK_FALSE(no.majorizes);
  CHECK(no.worst_prefix_gap == doctest::Approx(-0.4));
  CHECK(no.at_prefix == 1);

  std::vector<double> three{0.5, 0.3, 0.2};
  CHECK_THROWS_AS(majorizes(a, three), std::invalid_argument);
}

TEST_CASE("first prefix carries the slack in the worked example") {
  std::vector<double> a{0.8, 0.2}, b{0.6, 0.4};
  // Prefix 1 has slack +0.2; the full prefix has 0.
  std::vector<double> partial{0.8};
  std::vector<double> partial_b{0.6};
  CHECK(majorizes(partial, partial_b).worst_prefix_gap == doctest::Approx(0.2));
}

TEST_CASE("entropy and gini") {
  for (std::size_t k : {1u, 2u, 5u, 9u}) {
    std::vector<double> uni(k, 1.0 / k);
    CHECK(shannon_entropy(uni) == doctest::Approx(std::log(double(k))));
    CHECK(gini(uni) == doctest::Approx(0.0));
    std::vector<double> point(k, 0.0);
    point[0] = 1.0;
    CHECK(shannon_entropy(point) == 0.0);
    CHECK(gini(point) == doctest::Approx((k - 1.0) / k));
  }
  std::vector<double> p{0.8, 0.2};
  CHECK(shannon_entropy(p) == doctest::Approx(0.5004).epsilon(1e-4));
}

TEST_CASE("more players give more diverse equilibria") {
  std::mt19937_64 rng(12);
  for (int c = 0; c < 40; ++c) {
    ValueVector d = random_decreasing(rng);
    for (double g : {0.5, 1.0, 2.0, kInf}) {
      ScoreFunction s = power_or_inf(g);
      for (long n = 2; n < 8; ++n) {
        Strategy a = solve_eq(n, d, s).strategy;
        Strategy b = solve_eq(n + 1, d, s).strategy;
        CHECK(majorizes(a.probs(), b.probs(), 1e-7).majorizes);
        CHECK(schur_consistent(a.probs(), b.probs()));
      }
    }
  }
}

TEST_CASE("stronger congestion gives more diverse equilibria") {
  std::mt19937_64 rng(13);
  const double grid[] = {0.5, 1.0, 2.0, 5.0, kInf};
  for (int c = 0; c < 40; ++c) {
    ValueVector d = random_decreasing(rng);
    const long n = 2 + static_cast<long>(rng() % 7);
    for (int i = 0; i + 1 < 5; ++i) {
      Strategy a = solve_eq(n, d, power_or_inf(grid[i])).strategy;
      Strategy b = solve_eq(n, d, power_or_inf(grid[i + 1])).strategy;
      CHECK(majorizes(a.probs(), b.probs(), 1e-7).majorizes);
    }
  }
}

TEST_CASE("optima are more diverse than equilibria") {
  std::mt19937_64 rng(14);
  for (int c = 0; c < 40; ++c) {
    ValueVector d = random_decreasing(rng);
    const long n = 2 + static_cast<long>(rng() % 7);
    for (double g : {0.5, 1.0, 2.0, kInf}) {
      ScoreFunction s = power_or_inf(g);
      Strategy eq = solve_eq(n, d, s).strategy;
      Strategy opt = solve_opt(n, d, s).strategy;
      Strategy inf = solve_eq(n, d, ScoreFunction::bertrand()).strategy;
      CHECK(majorizes(eq.probs(), opt.probs(), 1e-7).majorizes);
      CHECK(majorizes(eq.probs(), inf.probs(), 1e-7).majorizes);
      CHECK(schur_consistent(eq.probs(), opt.probs()));
    }
  }
}
