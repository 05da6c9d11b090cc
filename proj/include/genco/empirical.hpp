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

// Sample-based evaluation of the game: unbiased U-statistic utilities from
// answers drawn by a tool, plus grid searches over the sampling parameter.

#ifndef GENCO_EMPIRICAL_HPP_
#define GENCO_EMPIRICAL_HPP_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genco/score.hpp"

namespace genco {

/// Thrown by the loader; the message carries the line number when known.
class SampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Answers of one (tool, tau, instance) cell. Answer types are sorted by
/// their normalized string.
struct SampleSet {
  std::string instance_id;
  std::string tool;
  std::string tau;
  std::vector<std::string> answers;
  std::vector<long> counts;   // a_k >= 1
  std::vector<double> valid;  // d_k in {0, 1}
  long total = 0;             // S

  bool same_cell(const SampleSet& other) const {
    return instance_id == other.instance_id && tool == other.tool &&
           tau == other.tau;
  }
  /// Count of `answer`, 0 when absent.
  long count_of(const std::string& answer) const;
  double mean_validity() const;
};

/// Trim ASCII whitespace and lowercase ASCII letters.
std::string normalize_answer(std::string_view raw);

/// Reads the sample CSV (`instance_id,tool,tau,answer,valid[,count]`).
/// Cells come back sorted by (tool, tau, instance_id). Warnings, such as an
/// empty file, are appended to `warnings` when given.
std::vector<SampleSet> load_samples(const std::string& path,
                                    std::vector<std::string>* warnings = nullptr);
std::vector<SampleSet> parse_samples(std::istream& in,
                                     std::vector<std::string>* warnings = nullptr);

/// Hypergeometric pmf: l successes in m draws without replacement from a
/// population of size `population` holding `successes`.
std::vector<double> hypergeometric_pmf(long successes, long population, long m);

/// Expected utility of one of n players who all draw from `k` without
/// replacement.
double ustat_self(const SampleSet& k, long n, const ScoreFunction& s);

struct BackgroundGroup {
  const SampleSet* samples = nullptr;
  long count = 0;
};

/// Utility of a deviator drawing from `dev` while each background group draws
/// `count` answers from its own sample. A group whose cell equals `dev`
/// shares the deviator's sample and draws from what is left of it.
double ustat_cross(const SampleSet& dev, std::span<const BackgroundGroup> groups,
                   const ScoreFunction& s);

/// n * ustat_self for the up class, n * ustat_self under x^1 for the down
/// class (expected number of distinct valid answers).
double welfare_hat(const SampleSet& k, long n, const ScoreFunction& s);

/// sqrt(1 / (S R)).
double se_bound(long samples, long repetitions);

struct UtilityGrid {
  std::string tool;
  std::vector<std::string> taus;      // grid order: numeric, then string
  std::vector<std::string> instances;
  /// u[dev][bg]: deviator at taus[dev] against n-1 players at taus[bg].
  std::vector<std::vector<double>> u;
  std::vector<double> welfare;
  std::vector<double> se;
  long min_samples = 0;
};

struct GridSolution {
  UtilityGrid grid;
  double epsilon = 0.0;
  std::vector<std::size_t> eq;  // indices into grid.taus, possibly empty
  std::size_t opt = 0;
};

/// Groups one tool's cells by tau; every tau must carry the same instances.
std::vector<std::string> tau_grid(std::span<const SampleSet> cells);

/// Averages across instances. A negative `epsilon` selects 2 * se_bound.
GridSolution grid_solution(std::span<const SampleSet> cells, long n,
                           const ScoreFunction& s, double epsilon = -1.0);

struct EmpiricalMarketEq {
  long m1 = 0;
  std::string tau1;  // empty when m1 == 0
  long m2 = 0;
  std::string tau2;  // empty when m2 == 0
  double u1 = 0.0;
  double u2 = 0.0;
  double max_gain = 0.0;
};

struct EmpiricalMarket {
  std::vector<EmpiricalMarketEq> equilibria;
  double epsilon = 0.0;
};

/// Brute force over splits and tau pairs; keeps candidates where no player
/// gains more than epsilon by changing tau and/or tool.
EmpiricalMarket pairwise_market_empirical(std::span<const SampleSet> tool1,
                                          std::span<const SampleSet> tool2,
                                          long n, const ScoreFunction& s,
                                          double epsilon = -1.0);

}  // namespace genco

#endif  // GENCO_EMPIRICAL_HPP_
