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


#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "cli/io.hpp"
#include "doctest.h"

namespace fs = std::filesystem;
using genco::cli::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = genco::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() /
               ("genco-test-" + name + "-" +
                std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string data_dir() {
  const char* env = std::getenv("GENCO_DATA_DIR");
  return env ? env : "data";
}

std::size_t count_files(const fs::path& dir) {
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(dir)) n += e.is_regular_file();
  return n;
}

// Small two-tau, two-instance corpus for the estimate tests.
const char* kSmallSamples =
    "instance_id,tool,tau,answer,valid,count\n"
    "q1,t,0.5,a,1,3\nq1,t,0.5,b,1,3\nq1,t,0.5,c,0,2\n"
    "q1,t,1,a,1,6\nq1,t,1,c,0,2\n"
    "q2,t,0.5,x,1,4\nq2,t,0.5,y,1,4\n"
    "q2,t,1,x,1,7\nq2,t,1,z,0,1\n";

}  // namespace

TEST_CASE("solve commands reproduce the worked example") {
  Result eq = invoke({"solve-eq", "--n", "2", "--d", "3,2", "--gamma", "1"});
  REQUIRE(eq.code == 0);
  json j = json::parse(eq.out);
  CHECK(j["strategy"][0].get<double>() == doctest::Approx(0.8).epsilon(1e-7));
  CHECK(j["strategy"][1].get<double>() == doctest::Approx(0.2).epsilon(1e-7));
  CHECK(j["per_player_utility"].get<double>() == doctest::Approx(1.8).epsilon(1e-7));
  CHECK(j["meta"]["tool"] == "genco");
  CHECK(j["meta"]["version"] == GENCO_VERSION);

  Result opt = invoke({"solve-opt", "--n", "2", "--d", "3,2", "--gamma", "1"});
  REQUIRE(opt.code == 0);
  json k = json::parse(opt.out);
  CHECK(k["strategy"][0].get<double>() == doctest::Approx(0.6).epsilon(1e-7));
  CHECK(k["welfare"].get<double>() == doctest::Approx(3.8).epsilon(1e-7));

  SUBCASE("instance file with a ranking") {
    fs::path dir = scratch("inst");
    spit(dir / "g.json",
         R"({"n": 2, "d": [2, 3], "score": {"kind": "power", "gamma": 1}, "rankings": [[2, 1]]})");
    Result r = invoke({"solve-eq", "--instance", (dir / "g.json").string()});
    REQUIRE(r.code == 0);
    json g = json::parse(r.out);
    CHECK(g["strategy"][1].get<double>() == doctest::Approx(0.8).epsilon(1e-7));
    CHECK(g["meta"]["input_sha256"].size() == 1);
    fs::remove_all(dir);
  }
}

TEST_CASE("validation errors exit with code 2 and an error document") {
  Result bad = invoke({"solve-eq", "--n", "0", "--d", "-1,2"});
  CHECK(bad.code == 2);
  json e = json::parse(bad.out);
  CHECK(e["error"]["kind"] == "validation");
  CHECK(e["error"]["violations"].size() == 2);

  fs::path dir = scratch("bad");
  spit(dir / "g.json", R"({"n": 2, "d": [3, 2], "rankings": [[1, 1]]})");
  Result perm = invoke({"solve-eq", "--instance", (dir / "g.json").string()});
  CHECK(perm.code == 2);
  CHECK(perm.out.find("not a permutation") != std::string::npos);
  spit(dir / "broken.json", "{not json");
  CHECK(invoke({"solve-opt", "--instance", (dir / "broken.json").string()}).code == 2);
  CHECK(invoke({"solve-eq", "--instance", (dir / "missing.json").string()}).code == 2);
  CHECK(invoke({"solve-eq", "--n", "2", "--d", "3,2", "--gamma", "-1"}).code == 2);
  CHECK(invoke({"no-such-command"}).code == 2);
  fs::remove_all(dir);
}

TEST_CASE("limits, poa and dynamics") {
  Result lim = invoke({"limits", "--d", "5,2", "--gammas", "1,0.5"});
  REQUIRE(lim.code == 0);
  CHECK(lim.out.find("0.714285714286") != std::string::npos);
  CHECK(lim.out.find("0.862068965517") != std::string::npos);

  Result poa = invoke({"poa", "--tight", "4"});
  REQUIRE(poa.code == 0);
  json p = json::parse(poa.out);
  CHECK(p["ratio"].get<double>() >= 1.5625);
  CHECK(p["eq_verified"] == true);

  Result random_poa = invoke({"poa", "--n", "3", "--d", "1,0.6,0.3", "--gamma", "2",
                              "--starts", "4", "--seed", "5"});
  REQUIRE(random_poa.code == 0);
  CHECK(json::parse(random_poa.out)["ratio"].get<double>() <= 2.0 + 1e-6);

  std::vector<std::string> dyn{"dynamics", "--n", "3", "--d", "3,2,1", "--gamma", "inf",
                               "--starts", "3", "--seed", "42"};
  Result a = invoke(dyn);
  Result b = invoke(dyn);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  json d = json::parse(a.out);
  CHECK(d["meta"]["config"]["seed"] == "42");
  CHECK(d["runs"].size() == 3);
  for (const auto& run : d["runs"]) CHECK(run["converged"] == true);
}

TEST_CASE("market command") {
  fs::path dir = scratch("market");
  spit(dir / "g.json",
       R"({"n": 2, "d": [3, 2, 1, 0], "score": {"kind": "power", "gamma": 1},
           "rankings": [[1, 2, 3, 4], [4, 1, 2, 3]]})");
  Result r = invoke({"market", "--instance", (dir / "g.json").string()});
  REQUIRE(r.code == 0);
  json m = json::parse(r.out);
  REQUIRE(m["equilibria"].size() == 1);
  CHECK(m["equilibria"][0]["counts"][1] == 0);
  CHECK_FALSE(m["note"].get<std::string>().empty());
  fs::remove_all(dir);
}

TEST_CASE("estimate and its cache") {
  fs::path dir = scratch("estimate");
  fs::path samples = dir / "s.csv";
  spit(samples, kSmallSamples);
  fs::path cache = dir / "cache";
  fs::path out = dir / "out";
  std::vector<std::string> args{"estimate", "--samples", samples.string(), "--n", "1,2",
                                "--out-dir", out.string(), "--cache-dir", cache.string()};
  // The environment variable would take precedence over --cache-dir.
  unsetenv("GENCO_CACHE_DIR");

  Result first = invoke(args);
  REQUIRE(first.code == 0);
  CHECK(first.err.find("0 hit(s), 2 miss(es)") != std::string::npos);
  std::string grid = slurp(out / "utility_grid.csv");
  std::string report = slurp(out / "estimate.json");
  CHECK(grid.rfind("# genco", 0) == 0);
  CHECK(grid.find("input_sha256") != std::string::npos);
  CHECK(count_files(cache) == 2);

  Result second = invoke(args);
  REQUIRE(second.code == 0);
  CHECK(second.err.find("2 hit(s), 0 miss(es)") != std::string::npos);
  CHECK(slurp(out / "utility_grid.csv") == grid);
  CHECK(slurp(out / "estimate.json") == report);

  json rep = json::parse(report);
  CHECK(rep["grids"][0]["n"] == 1);
  CHECK(rep["grids"][0]["tau_opt"] == "0.5");

  SUBCASE("a different gamma adds entries") {
    std::vector<std::string> g2 = args;
    g2.insert(g2.end(), {"--gamma", "2"});
    REQUIRE(invoke(g2).code == 0);
    CHECK(count_files(cache) == 4);
  }
  SUBCASE("a corrupted entry is recomputed with a warning") {
    for (const auto& e : fs::directory_iterator(cache)) {
      std::string text = slurp(e.path());
      text[text.size() / 2] = text[text.size() / 2] == '1' ? '2' : '1';
      spit(e.path(), text);
    }
    Result third = invoke(args);
    REQUIRE(third.code == 0);
    CHECK(third.err.find("warning: cache entry") != std::string::npos);
    CHECK(third.err.find("0 hit(s), 2 miss(es)") != std::string::npos);
    CHECK(slurp(out / "utility_grid.csv") == grid);
    Result fourth = invoke(args);
    CHECK(fourth.err.find("2 hit(s)") != std::string::npos);
  }
  SUBCASE("environment variable overrides the flag") {
    fs::path env_cache = dir / "env-cache";
    setenv("GENCO_CACHE_DIR", env_cache.string().c_str(), 1);
    Result r = invoke(args);
    unsetenv("GENCO_CACHE_DIR");
    REQUIRE(r.code == 0);
    CHECK(count_files(env_cache) == 2);
  }
  SUBCASE("one cell at n = 1") {
    fs::path one = dir / "one.csv";
    spit(one, "instance_id,tool,tau,answer,valid\nq,t,0.7,a,1\nq,t,0.7,b,0\n");
    fs::path out1 = dir / "out1";
    Result r = invoke({"estimate", "--samples", one.string(), "--n", "1", "--out-dir",
                       out1.string()});
    REQUIRE(r.code == 0);
    json j = json::parse(slurp(out1 / "estimate.json"));
    CHECK(j["grids"][0]["tau_opt"] == "0.7");
  }
  SUBCASE("n above the sample size is a validation error") {
    CHECK(invoke({"estimate", "--samples", samples.string(), "--n", "99", "--out-dir",
                  out.string()})
              .code == 2);
  }
  fs::remove_all(dir);
}

TEST_CASE("pairwise and distance on the bundled corpus") {
  const std::string corpus = data_dir() + "/synthetic_samples.csv";
  REQUIRE(fs::exists(corpus));
  fs::path dir = scratch("pairwise");
  Result p = invoke({"pairwise", "--samples", corpus, "--tool1", "alpha", "--tool2", "beta",
                     "--n", "2", "--out", (dir / "pairs.csv").string()});
  REQUIRE(p.code == 0);
  std::string pairs = slurp(dir / "pairs.csv");
  CHECK(pairs.rfind("# genco", 0) == 0);
  CHECK(pairs.find("alpha") != std::string::npos);

  Result d = invoke({"distance", "--samples", corpus, "--out", (dir / "d.csv").string()});
  REQUIRE(d.code == 0);
  std::string first = slurp(dir / "d.csv");
  CHECK(first.find("alpha/") != std::string::npos);
  REQUIRE(invoke({"distance", "--samples", corpus, "--out", (dir / "d.csv").string()}).code == 0);
  CHECK(slurp(dir / "d.csv") == first);

  CHECK(invoke({"pairwise", "--samples", corpus, "--tool1", "alpha", "--tool2", "nope",
                "--n", "2"})
            .code == 2);
  fs::remove_all(dir);
}

TEST_CASE("check command") {
  Result r = invoke({"check", "--seed", "3", "--cases", "25"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["meta"]["config"]["seed"] == "3");
}

TEST_CASE("io helpers") {
  using namespace genco::cli;
  CHECK(num(0.1 + 0.2) == 0.3);
  CHECK(fmt(1.0 / 3) == "0.333333333333");
  CHECK(num_or_string(INFINITY) == "inf");
  CHECK(sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

  fs::path dir = scratch("io");
  write_atomic((dir / "f.txt").string(), "hello");
  CHECK(slurp(dir / "f.txt") == "hello");
  CHECK(count_files(dir) == 1);
  fs::remove_all(dir);

  genco::GameInstance g = parse_instance(json::parse(R"({"n": 3, "d": [1, 2]})"));
  CHECK(g.rankings.size() == 1);
  CHECK(g.rankings[0] == std::vector<long>{1, 2});
  CHECK(parse_instance(instance_to_json(g)).d == g.d);
  CHECK_THROWS_AS(parse_instance(json::parse(R"({"n": "x", "d": [1]})")), ValidationError);
  CHECK(score_from_gamma("inf").is_infinite());
}
