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

// Competition across tools: partially symmetric pure equilibria, where every
// player on tool j plays the same strategy p^(j), and the market shares
// they induce.

#ifndef GENCO_MARKET_HPP_
#define GENCO_MARKET_HPP_

#include <set>
#include <span>
#include <string>
#include <vector>

#include "genco/core.hpp"
#include "genco/dynamics.hpp"
#include "genco/score.hpp"

namespace genco {

/// Symmetric equilibrium strategy of a group of m players sharing `ranking`
/// when every type k additionally faces an independent external count
/// `background[k]`. An empty background means no outside players.
Strategy group_eq_response(long m, const Ranking& ranking,
                           std::span<const CountDistribution> background,
                           const ValueVector& d, const ScoreFunction& s);

/// Count distribution per type produced by `count` players all using `p`.
std::vector<CountDistribution> group_counts(const Strategy& p, long count);

struct MarketEquilibrium {
  std::vector<long> counts;          // m_j
  std::vector<Strategy> strategies;  // p^(j); meaningful where m_j > 0
  std::vector<double> utilities;     // per-player utility on tool j
  double max_gain = 0.0;             // largest audited deviation gain
};

enum class SplitStatus { kVerified, kRejected, kNotConverged };
const char* to_string(SplitStatus status);

struct SplitOutcome {
  std::vector<long> counts;
  SplitStatus status = SplitStatus::kRejected;
  int iterations = 0;
  double max_gain = 0.0;
};

struct MarketSearch {
  std::vector<MarketEquilibrium> equilibria;
  std::vector<SplitOutcome> splits;
};

struct MarketOptions {
  double epsilon = 1e-7;
  double fixed_point_tol = 1e-8;
  int max_iterations = 500;
};

/// Enumerates every split of n players over one or two tools, computes the
/// group strategies by alternating group responses, and keeps the splits
/// that pass the deviation audit. The result is constructive: splits that
/// fail to converge are reported, not ruled out.
MarketSearch find_partial_sym_equilibria(long n, std::span<const Ranking> tools,
                                         const ValueVector& d,
                                         const ScoreFunction& s,
                                         const MarketOptions& options = {});

/// Largest gain any player in `eq` can get by changing strategy within
/// their tool or by switching tool and best-responding.
double audit_market_equilibrium(const MarketEquilibrium& eq,
                                std::span<const Ranking> tools,
                                const ValueVector& d, const ScoreFunction& s);

struct ToolShare {
  std::set<long> shares;
  long share_max = 0;
  long share_min = 0;
  bool empty = true;
};

struct MarketShareReport {
  std::vector<ToolShare> tools;
  /// Found equilibria only bound the true share sets.
  std::string note;
};

MarketShareReport market_share_bounds(
    std::span<const MarketEquilibrium> equilibria, std::size_t num_tools);

}  // namespace genco

#endif  // GENCO_MARKET_HPP_
