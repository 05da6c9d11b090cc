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


// Python module genco._core: thin wrappers over the library. Strategies and
// value vectors cross the boundary as plain lists of floats; score functions
// are given by their exponent, with math.inf for the winner-takes-all score.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "genco/core.hpp"
#include "genco/distance.hpp"
#include "genco/diversity.hpp"
#include "genco/dynamics.hpp"
#include "genco/empirical.hpp"
#include "genco/market.hpp"
#include "genco/reduce.hpp"
#include "genco/score.hpp"
#include "genco/solve.hpp"

namespace py = pybind11;
using namespace genco;

namespace {

ScoreFunction score_of(double gamma) {
  return std::isinf(gamma) ? ScoreFunction::bertrand() : ScoreFunction::power(gamma);
}

std::vector<double> to_list(const Strategy& s) {
  return {s.probs().begin(), s.probs().end()};
}

py::dict solution_dict(const SymmetricSolution& s) {
  py::dict d;
  d["strategy"] = to_list(s.strategy);
  d["level"] = s.level;
  d["per_player_utility"] = s.per_player_utility;
  d["welfare"] = s.welfare;
  return d;
}

std::vector<Ranking> rankings_of(const std::vector<std::vector<long>>& r) {
  std::vector<Ranking> out;
  for (const auto& one : r) out.push_back(Ranking::from_one_based(one));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Equilibria of generative-tool competition games";

  py::register_exception<SampleError>(m, "SampleError", PyExc_ValueError);

  m.def("u", [](double gamma, long m_, double p) { return u(score_of(gamma), m_, p); },
        py::arg("gamma"), py::arg("m"), py::arg("p"));
  m.def("w", [](double gamma, long n, double p) { return w(score_of(gamma), n, p); },
        py::arg("gamma"), py::arg("n"), py::arg("p"));
  m.def("score_class",
        [](double gamma) { return std::string(to_string(classify_score(score_of(gamma)))); },
        py::arg("gamma"));

  m.def("pava_reduce", [](const std::vector<double>& d) { return pava_reduce(d).reduced; },
        py::arg("d"));
  m.def("solve_eq",
        [](long n, const std::vector<double>& d, double gamma) {
          return solution_dict(solve_eq(n, ValueVector(d), score_of(gamma)));
        },
        py::arg("n"), py::arg("d"), py::arg("gamma") = 1.0);
  m.def("solve_opt",
        [](long n, const std::vector<double>& d, double gamma) {
          return solution_dict(solve_opt(n, ValueVector(d), score_of(gamma)));
        },
        py::arg("n"), py::arg("d"), py::arg("gamma") = 1.0);
  m.def("limit_dist",
        [](const std::vector<double>& d, double gamma) {
          return to_list(limit_dist(ValueVector(d), gamma));
        },
        py::arg("d"), py::arg("gamma"));

  m.def("majorizes",
        [](const std::vector<double>& p, const std::vector<double>& q, double tol) {
          return majorizes(p, q, tol).majorizes;
        },
        py::arg("p"), py::arg("q"), py::arg("tol") = 1e-9);
  m.def("shannon_entropy", [](const std::vector<double>& p) { return shannon_entropy(p); });
  m.def("gini", [](const std::vector<double>& p) { return gini(p); });

  m.def("poa_tight",
        [](long n) {
          TightInstance t = poa_tight_instance(n);
          const ScoreFunction id = ScoreFunction::identity();
          return welfare_of(t.high_welfare, t.d, id) / welfare_of(t.equilibrium, t.d, id);
        },
        py::arg("n"), "welfare ratio of the tight price-of-anarchy family");
  m.def("poa_estimate",
        [](long n, const std::vector<double>& d, double gamma, int starts, std::uint64_t seed) {
          PoaReport r = poa_estimate(n, ValueVector(d), score_of(gamma), starts, seed);
          py::dict out;
          out["opt_welfare"] = r.opt_welfare;
          out["eq_welfare"] = r.eq_welfare;
          out["ratio"] = r.ratio;
          out["eq_converged"] = r.eq_converged;
          return out;
        },
        py::arg("n"), py::arg("d"), py::arg("gamma") = 1.0, py::arg("starts") = 20,
        py::arg("seed") = 1);

  m.def("market_equilibria",
        [](long n, const std::vector<double>& d, const std::vector<std::vector<long>>& rankings,
           double gamma) {
          std::vector<Ranking> tools = rankings_of(rankings);
          MarketSearch s = find_partial_sym_equilibria(n, tools, ValueVector(d), score_of(gamma));
          py::list out;
          for (const auto& e : s.equilibria) {
            py::dict one;
            one["counts"] = e.counts;
            py::list strategies;
            for (std::size_t j = 0; j < e.strategies.size(); ++j) {
              if (e.counts[j] > 0) {
                strategies.append(to_list(e.strategies[j]));
              } else {
                strategies.append(py::none());
              }
            }
            one["strategies"] = strategies;
            one["utilities"] = e.utilities;
            out.append(one);
          }
          return out;
        },
        py::arg("n"), py::arg("d"), py::arg("rankings"), py::arg("gamma") = 1.0);

  m.def("isotonic_l1_fit",
        [](const std::vector<double>& t) {
          IsotonicFit f = isotonic_l1_fit(t);
          return py::make_tuple(f.fitted, f.loss);
        },
        py::arg("target"));
  m.def("wi", [](const std::vector<double>& p, const std::vector<double>& q) { return wi(p, q); });
  m.def("wi_avg",
        [](const std::vector<double>& p, const std::vector<double>& q) { return wi_avg(p, q); });

  m.def("se_bound", &se_bound, py::arg("samples"), py::arg("repetitions"));
  m.def("ustat_self",
        [](const std::map<std::string, std::pair<long, int>>& answers, long n, double gamma) {
          SampleSet set;
          for (const auto& [answer, cv] : answers) {
            set.answers.push_back(answer);
            set.counts.push_back(cv.first);
            set.valid.push_back(cv.second);
            set.total += cv.first;
          }
          return ustat_self(set, n, score_of(gamma));
        },
        py::arg("answers"), py::arg("n"), py::arg("gamma") = 1.0,
        "answers maps each answer to (count, valid)");
  m.def("estimate_grid",
        [](const std::string& path, const std::string& tool, long n, double gamma) {
          std::vector<SampleSet> cells;
          for (auto& c : load_samples(path)) {
            if (c.tool == tool) cells.push_back(std::move(c));
          }
          if (cells.empty()) throw py::value_error("no samples for tool " + tool);
          GridSolution g = grid_solution(cells, n, score_of(gamma));
          py::dict out;
          out["taus"] = g.grid.taus;
          out["welfare"] = g.grid.welfare;
          out["u"] = g.grid.u;
          std::vector<std::string> eq;
          for (std::size_t i : g.eq) eq.push_back(g.grid.taus[i]);
          out["tau_eq"] = eq;
          out["tau_opt"] = g.grid.taus[g.opt];
          out["epsilon"] = g.epsilon;
          return out;
        },
        py::arg("path"), py::arg("tool"), py::arg("n"), py::arg("gamma") = 1.0);
}
