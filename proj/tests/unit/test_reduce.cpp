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


#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "genco/reduce.hpp"

using namespace genco;

TEST_CASE("canonicalize") {
  std::vector<double> d{0, 5, 3};
  std::vector<long> pi{2, 3, 1};
  Ranking r = Ranking::from_one_based(pi);
  CHECK(canonicalize(d, r) == std::vector<double>{5, 3, 0});
  CHECK(canonicalize(d, Ranking::identity(3)) == d);
  CHECK(decanonicalize(canonicalize(d, r), r) == d);
  std::vector<double> short_d{1, 2};
  CHECK_THROWS_AS(canonicalize(short_d, r), std::invalid_argument);
}

TEST_CASE("pava_reduce examples") {
  std::vector<double> a{1, 0, 1};
  PavaResult r = pava_reduce(a);
  REQUIRE(r.reduced.size() == 3);
  CHECK(r.reduced[0] == 1.0);
  CHECK(r.reduced[1] == doctest::Approx(0.5));
  CHECK(r.reduced[2] == doctest::Approx(0.5));
  REQUIRE(r.blocks.size() == 2);
  CHECK(r.blocks[1] == std::pair<std::size_t, std::size_t>{1, 3});
  CHECK(r.mean_of_block[1] == doctest::Approx(0.5));

  std::vector<double> b{5, 3, 1};
  CHECK(pava_reduce(b).reduced == b);
  std::vector<double> c{0, 1};
  CHECK(pava_reduce(c).reduced == std::vector<double>{0.5, 0.5});
  std::vector<double> one{4};
  CHECK(pava_reduce(one).reduced == one);
  CHECK(pava_reduce(std::vector<double>{}).reduced.empty());
  // Equal neighbours are already weakly decreasing.
  std::vector<double> flat{2, 2, 1};
  CHECK(pava_reduce(flat).blocks.size() == 3);
}

TEST_CASE("pava_reduce properties on random inputs") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int c = 0; c < 500; ++c) {
    std::vector<double> d(1 + rng() % 10);
    for (double& v : d) v = unit(rng) < 0.2 ? 0.0 : unit(rng);
    PavaResult r = pava_reduce(d);
    for (std::size_t k = 1; k < d.size(); ++k) CHECK(r.reduced[k] <= r.reduced[k - 1]);
    double before = std::accumulate(d.begin(), d.end(), 0.0);
    double after = std::accumulate(r.reduced.begin(), r.reduced.end(), 0.0);
    CHECK(std::abs(before - after) <= 1e-12);
    for (std::size_t b = 0; b < r.blocks.size(); ++b) {
      auto [lo, hi] = r.blocks[b];
      double sum = std::accumulate(d.begin() + lo, d.begin() + hi, 0.0);
      CHECK(r.mean_of_block[b] == doctest::Approx(sum / (hi - lo)));
      for (std::size_t k = lo; k < hi; ++k) CHECK(r.reduced[k] == r.mean_of_block[b]);
    }
    CHECK(pava_reduce(r.reduced).reduced == r.reduced);
  }
}
