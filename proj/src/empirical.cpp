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

#include "genco/empirical.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "genco/dynamics.hpp"

namespace genco {

namespace {

std::string trim(std::string_view raw) {
  std::size_t b = 0;
  std::size_t e = raw.size();
  while (b < e && std::isspace(static_cast<unsigned char>(raw[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(raw[e - 1]))) --e;
  return std::string(raw.substr(b, e - b));
}

// RFC 4180-style split: quoted fields may hold commas and doubled quotes.
std::vector<std::string> split_csv(const std::string& line, long line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (quoted) {
    throw SampleError("line " + std::to_string(line_no) + ": unterminated quote");
  }
  fields.push_back(std::move(cur));
  return fields;
}

struct Cell {
  std::map<std::string, std::pair<long, int>> answers;  // count, validity
};

using CellKey = std::tuple<std::string, std::string, std::string>;  // tool, tau, id

double mean(const std::vector<double>& v) {
  double total = 0.0;
  for (double x : v) total += x;
  return total / static_cast<double>(v.size());
}

double parse_tau(const std::string& tau, bool* ok) {
  char* end = nullptr;
  double v = std::strtod(tau.c_str(), &end);
  *ok = end != tau.c_str() && *end == '\0' && std::isfinite(v);
  return v;
}

// (tau, instance) -> cell for a single tool.
struct ToolCells {
  std::string tool;
  std::vector<std::string> taus;
  std::vector<std::string> instances;
  std::map<std::pair<std::string, std::string>, const SampleSet*> at;
  long min_samples = 0;

  const SampleSet& get(const std::string& tau, const std::string& inst) const {
    return *at.at({tau, inst});
  }
};

ToolCells index_tool(std::span<const SampleSet> cells) {
  if (cells.empty()) throw std::invalid_argument("no sample cells given");
  ToolCells out;
  out.tool = cells.front().tool;
  out.taus = tau_grid(cells);
  std::set<std::string> instances;
  out.min_samples = cells.front().total;
  for (const auto& c : cells) {
    out.at[{c.tau, c.instance_id}] = &c;
    instances.insert(c.instance_id);
    out.min_samples = std::min(out.min_samples, c.total);
  }
  out.instances.assign(instances.begin(), instances.end());
  return out;
}

}  // namespace

long SampleSet::count_of(const std::string& answer) const {
  auto it = std::lower_bound(answers.begin(), answers.end(), answer);
  if (it == answers.end() || *it != answer) return 0;
  return counts[static_cast<std::size_t>(it - answers.begin())];
}

double SampleSet::mean_validity() const {
  double valid_count = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    valid_count += static_cast<double>(counts[k]) * valid[k];
  }
  return total > 0 ? valid_count / static_cast<double>(total) : 0.0;
}

std::string normalize_answer(std::string_view raw) {
  std::string out = trim(raw);
  for (char& ch : out) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return out;
}

std::vector<SampleSet> load_samples(const std::string& path,
                                    std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw SampleError("cannot open sample file: " + path);
  return parse_samples(in, warnings);
}

std::vector<SampleSet> parse_samples(std::istream& in,
                                     std::vector<std::string>* warnings) {
  std::string line;
  long line_no = 0;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    header = split_csv(line, line_no);
    break;
  }
  if (header.empty()) {
    if (warnings) warnings->push_back("sample file is empty");
    return {};
  }
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < header.size(); ++i) {
    column[normalize_answer(header[i])] = i;
  }
  for (const char* need : {"instance_id", "tool", "tau", "answer", "valid"}) {
    if (!column.count(need)) {
      throw SampleError(std::string("missing column: ") + need);
    }
  }
  const bool has_count = column.count("count") > 0;

  std::map<CellKey, Cell> cells;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto fields = split_csv(line, line_no);
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (fields.size() != header.size()) {
      throw SampleError(where + "expected " + std::to_string(header.size()) +
                        " fields, found " + std::to_string(fields.size()));
    }
    std::string valid_text = trim(fields[column["valid"]]);
    if (valid_text != "0" && valid_text != "1") {
      throw SampleError(where + "validity must be 0 or 1, found '" +
                        valid_text + "'");
    }
    long count = 1;
    if (has_count) {
      std::string text = trim(fields[column["count"]]);
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), count);
      if (ec != std::errc() || ptr != text.data() + text.size() || count < 1) {
        throw SampleError(where + "count must be a positive integer, found '" +
                          text + "'");
      }
    }
    CellKey key{trim(fields[column["tool"]]), trim(fields[column["tau"]]),
                trim(fields[column["instance_id"]])};
    if (std::get<0>(key).empty() || std::get<1>(key).empty() ||
        std::get<2>(key).empty()) {
      throw SampleError(where + "empty instance_id, tool or tau");
    }
    std::string answer = normalize_answer(fields[column["answer"]]);
    int validity = valid_text == "1" ? 1 : 0;
    auto& slot = cells[key].answers;
    auto it = slot.find(answer);
    if (it == slot.end()) {
      slot.emplace(answer, std::make_pair(count, validity));
    } else {
      if (it->second.second != validity) {
        throw SampleError(where + "answer '" + answer +
                          "' is marked both valid and invalid in cell (" +
                          std::get<0>(key) + ", " + std::get<1>(key) + ", " +
                          std::get<2>(key) + ")");
      }
      it->second.first += count;
    }
  }
  if (cells.empty() && warnings) warnings->push_back("sample file has no rows");

  std::vector<SampleSet> out;
  out.reserve(cells.size());
  for (auto& [key, cell] : cells) {
    SampleSet set;
    std::tie(set.tool, set.tau, set.instance_id) = key;
    for (auto& [answer, entry] : cell.answers) {
      set.answers.push_back(answer);
      set.counts.push_back(entry.first);
      set.valid.push_back(static_cast<double>(entry.second));
      set.total += entry.first;
    }
    out.push_back(std::move(set));
  }
  return out;
}

std::vector<double> hypergeometric_pmf(long successes, long population, long m) {
  if (population < 0 || successes < 0 || successes > population || m < 0 ||
      m > population) {
    throw std::invalid_argument("hypergeometric_pmf: draws exceed population");
  }
  std::vector<double> pmf(static_cast<std::size_t>(m) + 1, 0.0);
  const long lo = std::max(0L, m - (population - successes));
  const long hi = std::min(successes, m);
  auto log_choose = [](long a, long b) {
    return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
  };
  // Log-space weights; the common denominator cancels on normalization.
  double top = -INFINITY;
  std::vector<double> logs(pmf.size(), -INFINITY);
  for (long l = lo; l <= hi; ++l) {
    logs[l] = log_choose(successes, l) + log_choose(population - successes, m - l);
    top = std::max(top, logs[l]);
  }
  double total = 0.0;
  for (long l = lo; l <= hi; ++l) {
    pmf[l] = std::exp(logs[l] - top);
    total += pmf[l];
  }
  for (double& p : pmf) p /= total;
  return pmf;
}

double ustat_self(const SampleSet& k, long n, const ScoreFunction& s) {
  if (n < 1) throw std::invalid_argument("ustat_self: n must be >= 1");
  if (n > k.total) {
    throw std::invalid_argument("ustat_self: n exceeds the sample size");
  }
  BackgroundGroup self{&k, n - 1};
  return ustat_cross(k, std::span<const BackgroundGroup>(&self, 1), s);
}

double ustat_cross(const SampleSet& dev, std::span<const BackgroundGroup> groups,
                   const ScoreFunction& s) {
  if (dev.total < 1) throw std::invalid_argument("ustat_cross: empty sample");
  // Groups drawing from the same cell share one pool of samples.
  std::vector<BackgroundGroup> merged;
  long competitors = 0;
  for (const auto& g : groups) {
    if (g.count < 0) throw std::invalid_argument("negative group count");
    competitors += g.count;
    if (g.count == 0) continue;
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& m) {
      return m.samples->same_cell(*g.samples);
    });
    if (it == merged.end()) {
      merged.push_back(g);
    } else {
      it->count += g.count;
    }
  }
  if (auto top = s.max_arg(); top && competitors + 1 > *top) {
    throw std::invalid_argument("score table shorter than the player count");
  }
  for (const auto& g : merged) {
    long available = g.samples->same_cell(dev) ? dev.total - 1 : g.samples->total;
    if (g.count > available) {
      throw std::invalid_argument("group count exceeds its sample size");
    }
  }

  double total = 0.0;
  for (std::size_t k = 0; k < dev.answers.size(); ++k) {
    if (dev.valid[k] == 0.0) continue;
    CountDistribution c{{1.0}};
    for (const auto& g : merged) {
      std::vector<double> pmf =
          g.samples->same_cell(dev)
              ? hypergeometric_pmf(dev.counts[k] - 1, dev.total - 1, g.count)
              : hypergeometric_pmf(g.samples->count_of(dev.answers[k]),
                                   g.samples->total, g.count);
      c = convolve(c, CountDistribution{std::move(pmf)});
    }
    double share = 0.0;
    for (std::size_t j = 0; j < c.pmf.size(); ++j) {
      share += c.pmf[j] * s.reciprocal(static_cast<long>(j) + 1);
    }
    total += static_cast<double>(dev.counts[k]) * dev.valid[k] * share;
  }
  return total / static_cast<double>(dev.total);
}

double welfare_hat(const SampleSet& k, long n, const ScoreFunction& s) {
  const ScoreFunction& used =
      is_up(classify_score(s)) ? s : ScoreFunction::identity();
  return static_cast<double>(n) * ustat_self(k, n, used);
}

double se_bound(long samples, long repetitions) {
  if (samples < 1 || repetitions < 1) {
    throw std::invalid_argument("se_bound: sizes must be >= 1");
  }
  return std::sqrt(1.0 / (static_cast<double>(samples) *
                          static_cast<double>(repetitions)));
}

std::vector<std::string> tau_grid(std::span<const SampleSet> cells) {
  std::map<std::string, std::set<std::string>> by_tau;
  for (const auto& c : cells) {
    if (c.tool != cells.front().tool) {
      throw std::invalid_argument("cells mix tools '" + cells.front().tool +
                                  "' and '" + c.tool + "'");
    }
    by_tau[c.tau].insert(c.instance_id);
  }
  std::vector<std::string> taus;
  for (const auto& [tau, instances] : by_tau) {
    if (instances != by_tau.begin()->second) {
      throw std::invalid_argument("inconsistent grids across instances: tau " +
                                  tau + " has a different instance set");
    }
    taus.push_back(tau);
  }
  std::stable_sort(taus.begin(), taus.end(),
                   [](const std::string& a, const std::string& b) {
                     bool oka = false;
                     bool okb = false;
                     double va = parse_tau(a, &oka);
                     double vb = parse_tau(b, &okb);
                     if (oka != okb) return oka;
                     if (oka && va != vb) return va < vb;
                     return a < b;
                   });
  return taus;
}

GridSolution grid_solution(std::span<const SampleSet> cells, long n,
                           const ScoreFunction& s, double epsilon) {
  if (n < 1) throw std::invalid_argument("grid_solution: n must be >= 1");
  ToolCells tc = index_tool(cells);
  if (n > tc.min_samples) {
    throw std::invalid_argument("grid_solution: n exceeds the smallest cell");
  }
  const std::size_t g = tc.taus.size();
  const long reps = static_cast<long>(tc.instances.size());

  GridSolution out;
  UtilityGrid& grid = out.grid;
  grid.tool = tc.tool;
  grid.taus = tc.taus;
  grid.instances = tc.instances;
  grid.min_samples = tc.min_samples;
  grid.u.assign(g, std::vector<double>(g, 0.0));
  grid.welfare.assign(g, 0.0);
  grid.se.assign(g, 0.0);

  std::vector<double> per_instance(tc.instances.size());
  for (std::size_t bg = 0; bg < g; ++bg) {
    long smallest = 0;
    for (std::size_t i = 0; i < tc.instances.size(); ++i) {
      const SampleSet& cell = tc.get(tc.taus[bg], tc.instances[i]);
      per_instance[i] = welfare_hat(cell, n, s);
      smallest = i == 0 ? cell.total : std::min(smallest, cell.total);
    }
    grid.welfare[bg] = mean(per_instance);
    grid.se[bg] = se_bound(smallest, reps);
    for (std::size_t dev = 0; dev < g; ++dev) {
      for (std::size_t i = 0; i < tc.instances.size(); ++i) {
        BackgroundGroup group{&tc.get(tc.taus[bg], tc.instances[i]), n - 1};
        per_instance[i] =
            ustat_cross(tc.get(tc.taus[dev], tc.instances[i]),
                        std::span<const BackgroundGroup>(&group, 1), s);
      }
      grid.u[dev][bg] = mean(per_instance);
    }
  }

  out.epsilon = epsilon >= 0.0 ? epsilon : 2.0 * se_bound(tc.min_samples, reps);
  for (std::size_t t = 0; t < g; ++t) {
    bool stable = true;
    for (std::size_t dev = 0; dev < g && stable; ++dev) {
      stable = grid.u[dev][t] <= grid.u[t][t] + out.epsilon;
    }
    if (stable) out.eq.push_back(t);
  }
  out.opt = static_cast<std::size_t>(
      std::max_element(grid.welfare.begin(), grid.welfare.end()) -
      grid.welfare.begin());
  return out;
}

EmpiricalMarket pairwise_market_empirical(std::span<const SampleSet> tool1,
                                          std::span<const SampleSet> tool2,
                                          long n, const ScoreFunction& s,
                                          double epsilon) {
  if (n < 1) throw std::invalid_argument("pairwise market: n must be >= 1");
  const ToolCells tools[2] = {index_tool(tool1), index_tool(tool2)};
  if (tools[0].instances != tools[1].instances) {
    throw std::invalid_argument("the two tools cover different instance sets");
  }
  const long smallest = std::min(tools[0].min_samples, tools[1].min_samples);
  if (n > smallest) {
    throw std::invalid_argument("pairwise market: n exceeds the smallest cell");
  }
  const auto& instances = tools[0].instances;
  EmpiricalMarket out;
  out.epsilon = epsilon >= 0.0
                    ? epsilon
                    : 2.0 * se_bound(smallest, static_cast<long>(instances.size()));

  // Mean utility of a player on (tool t, tau) facing the given groups.
  auto utility = [&](std::size_t t, const std::string& tau, long own_count,
                     const std::string& own_tau, std::size_t own_tool,
                     long other_count, const std::string& other_tau) {
    double total = 0.0;
    for (const auto& inst : instances) {
      std::vector<BackgroundGroup> groups;
      if (own_count > 0) {
        groups.push_back({&tools[own_tool].get(own_tau, inst), own_count});
      }
      if (other_count > 0) {
        groups.push_back({&tools[1 - own_tool].get(other_tau, inst), other_count});
      }
      total += ustat_cross(tools[t].get(tau, inst), groups, s);
    }
    return total / static_cast<double>(instances.size());
  };

  const std::vector<std::string> none{""};
  for (long m1 = 0; m1 <= n; ++m1) {
    const long m[2] = {m1, n - m1};
    const auto& grid1 = m[0] > 0 ? tools[0].taus : none;
    const auto& grid2 = m[1] > 0 ? tools[1].taus : none;
    for (const auto& tau1 : grid1) {
      for (const auto& tau2 : grid2) {
        const std::string tau[2] = {tau1, tau2};
        EmpiricalMarketEq cand{m[0], tau1, m[1], tau2, 0.0, 0.0, 0.0};
        double worst = 0.0;
        for (std::size_t j = 0; j < 2; ++j) {
          if (m[j] == 0) continue;
          double current = utility(j, tau[j], m[j] - 1, tau[j], j, m[1 - j],
                                   tau[1 - j]);
          (j == 0 ? cand.u1 : cand.u2) = current;
          for (std::size_t t = 0; t < 2; ++t) {
            for (const auto& alt : tools[t].taus) {
              double dev = utility(t, alt, m[j] - 1, tau[j], j, m[1 - j],
                                   tau[1 - j]);
              worst = std::max(worst, dev - current);
            }
          }
        }
        cand.max_gain = worst;
        if (worst <= out.epsilon) out.equilibria.push_back(std::move(cand));
      }
    }
  }
  return out;
}

}  // namespace genco
