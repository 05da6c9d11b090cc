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
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "genco/distance.hpp"

using namespace genco;

namespace {

// Smallest L1 loss of a nonincreasing sequence restricted to a grid on
// [0, 1], by dynamic programming over grid levels.
double grid_best(const std::vector<double>& target, double step) {
  const int levels = static_cast<int>(std::lround(1.0 / step)) + 1;
  std::vector<double> best(levels, 0.0);
  for (double t : target) {
    // best[j]: minimal loss so far with the last value at level j; the next
    // value may use any level <= the previous one.
    std::vector<double> next(levels);
    double running = INFINITY;
    for (int j = levels - 1; j >= 0; --j) {
      running = std::min(running, best[j]);
      next[j] = running + std::abs(j * step - t);
    }
    best = std::move(next);
  }
  return *std::min_element(best.begin(), best.end());
}

SampleSet cell(const std::string& tool, const std::string& tau, const std::string& inst,
               std::vector<std::pair<std::string, long>> counts) {
  SampleSet s;
  s.tool = tool;
  s.tau = tau;
  s.instance_id = inst;
  for (auto& [a, c] : counts) {
    s.answers.push_back(a);
    s.counts.push_back(c);
    s.valid.push_back(1.0);
    s.total += c;
  }
  return s;
}

}  // namespace

TEST_CASE("isotonic L1 fit examples") {
  std::vector<double> dec{0.9, 0.5, 0.5, 0.1};
  IsotonicFit a = isotonic_l1_fit(dec);
  CHECK(a.fitted == dec);
  CHECK(a.loss == 0.0);

  std::vector<double> two{0.3, 0.7};
  IsotonicFit b = isotonic_l1_fit(two);
  CHECK(b.fitted[0] == doctest::Approx(0.5));
  CHECK(b.fitted[1] == doctest::Approx(0.5));
  CHECK(b.loss == doctest::Approx(0.4));

  std::vector<double> three{1, 3, 2};
  IsotonicFit c = isotonic_l1_fit(three);
  CHECK(c.loss == doctest::Approx(2.0));
  for (std::size_t i = 1; i < 3; ++i) CHECK(c.fitted[i] <= c.fitted[i - 1]);
  std::vector<double> scaled{0.1, 0.3, 0.2};
  CHECK(isotonic_l1_fit(scaled).loss <= grid_best(scaled, 0.01) + 1e-12);

  std::vector<double> bad{0.1, NAN};
  CHECK_THROWS_AS(isotonic_l1_fit(bad), std::invalid_argument);
}

TEST_CASE("isotonic L1 fit beats every grid candidate") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int c = 0; c < 200; ++c) {
    std::vector<double> t(1 + rng() % 5);
    for (double& v : t) v = unit(rng);
    IsotonicFit f = isotonic_l1_fit(t);
    double loss = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      loss += std::abs(f.fitted[i] - t[i]);
      if (i > 0) CHECK(f.fitted[i] <= f.fitted[i - 1]);
    }
    CHECK(loss == doctest::Approx(f.loss).epsilon(1e-12));
    CHECK(f.loss <= grid_best(t, 0.005) + 1e-12);
  }
}

TEST_CASE("weighted inversion") {
  std::vector<double> p{0.6, 0.4}, same{0.7, 0.3}, flip{0.3, 0.7};
  CHECK(wi(p, p) == 0.0);
  CHECK(wi(p, same) == 0.0);
  CHECK(wi(p, flip) == doctest::Approx(0.2).epsilon(1e-15));
  // The reverse direction only has to pool [0.4, 0.6], so it is cheaper.
  CHECK(wi(flip, p) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(wi_avg(p, flip) == doctest::Approx(0.15).epsilon(1e-15));
  CHECK(wi_avg(p, p) == 0.0);
  std::vector<double> three{0.5, 0.3, 0.2};
  CHECK_THROWS_AS(wi(p, three), std::invalid_argument);

  std::mt19937_64 rng(18);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int c = 0; c < 300; ++c) {
    const std::size_t k = 1 + rng() % 6;
    std::vector<double> a(k), b(k);
    for (double& v : a) v = unit(rng);
    for (double& v : b) v = unit(rng);
    double sa = std::accumulate(a.begin(), a.end(), 0.0);
    double sb = std::accumulate(b.begin(), b.end(), 0.0);
    for (double& v : a) v /= sa;
    for (double& v : b) v /= sb;
    double x = wi(a, b);
    CHECK(x >= 0.0);
    CHECK(x <= 1.0);
    CHECK(wi_avg(a, b) == wi_avg(b, a));

    // Zero exactly when b is nonincreasing along a's order.
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i] > a[j]; });
    bool agrees = true;
    for (std::size_t i = 1; i < k; ++i) agrees &= b[order[i]] <= b[order[i - 1]];
    CHECK((x <= 1e-12) == agrees);
  }
}

TEST_CASE("distributions and distance matrices") {
  std::vector<SampleSet> samples{
      cell("a", "base", "q1", {{"x", 30}, {"y", 10}, {"z", 2}}),
      cell("a", "alt", "q1", {{"x", 20}, {"y", 15}}),
      cell("b", "base", "q1", {{"x", 5}, {"y", 25}}),
      cell("a", "base", "q2", {{"u", 12}, {"v", 12}}),
      cell("a", "alt", "q2", {{"u", 40}, {"v", 1}}),
      cell("b", "base", "q2", {{"w", 3}}),
  };
  std::vector<std::string> warnings;
  DistributionSet set = build_distributions(samples, 10, &warnings);
  REQUIRE(set.labels.size() == 3);
  REQUIRE(set.instances == std::vector<std::string>{"q1", "q2"});
  // "z" totals 2 and falls below min_count.
  for (const auto& row : set.dist) REQUIRE(row[0]->size() == 2);
  // b/base puts no mass on {u, v} for q2.
  CHECK_FALSE(warnings.empty());

  DistanceMatrix m = distance_matrix(set);
  CHECK(m.instances == 2);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(m.d[i][i] == 0.0);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(m.d[i][j] == m.d[j][i]);
      CHECK(m.d[i][j] >= 0.0);
      CHECK(m.d[i][j] <= 1.0);
    }
  }
  // Both variants of tool a rank x over y and u over v.
  auto idx = [&](const std::string& tool, const std::string& variant) {
    return static_cast<std::size_t>(
        std::find(set.labels.begin(), set.labels.end(), DistanceLabel{tool, variant}) -
        set.labels.begin());
  };
  CHECK(m.d[idx("a", "base")][idx("a", "alt")] == 0.0);
  CHECK(m.d[idx("a", "base")][idx("b", "base")] > 0.0);

  std::string csv = to_csv(m);
  CHECK(csv.find("a/base") != std::string::npos);

  SUBCASE("identical distributions give a zero matrix") {
    std::vector<SampleSet> twin{cell("a", "v", "q", {{"x", 10}, {"y", 20}}),
                                cell("b", "v", "q", {{"x", 10}, {"y", 20}})};
    DistanceMatrix z = distance_matrix(build_distributions(twin));
    CHECK(z.d[0][1] == 0.0);
  }
  SUBCASE("missing cells are named") {
    DistributionSet gap = set;
    gap.dist[idx("b", "base")][1].reset();
    try {
      distance_matrix(gap);
      FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
      std::string what = e.what();
      CHECK(what.find("b") != std::string::npos);
      CHECK(what.find("q2") != std::string::npos);
    }
  }
}
