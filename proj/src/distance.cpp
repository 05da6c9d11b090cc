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

#include "genco/distance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace genco {

namespace {

struct Block {
  std::vector<double> sorted;
  std::size_t start = 0;

  double median() const {
    const std::size_t m = sorted.size();
    return m % 2 == 1 ? sorted[m / 2] : 0.5 * (sorted[m / 2 - 1] + sorted[m / 2]);
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

}  // namespace

IsotonicFit isotonic_l1_fit(std::span<const double> target) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (!std::isfinite(target[i])) {
      throw std::invalid_argument("isotonic_l1_fit: non-finite target");
    }
    blocks.push_back(Block{{target[i]}, i});
    while (blocks.size() > 1 &&
           blocks[blocks.size() - 2].median() < blocks.back().median()) {
      Block last = std::move(blocks.back());
      blocks.pop_back();
      Block& prev = blocks.back();
      std::vector<double> merged(prev.sorted.size() + last.sorted.size());
      std::merge(prev.sorted.begin(), prev.sorted.end(), last.sorted.begin(),
                 last.sorted.end(), merged.begin());
      prev.sorted = std::move(merged);
    }
  }
  IsotonicFit fit;
  fit.fitted.resize(target.size());
  for (const Block& b : blocks) {
    double level = b.median();
    for (std::size_t i = 0; i < b.sorted.size(); ++i) {
      fit.fitted[b.start + i] = level;
    }
  }
  for (std::size_t i = 0; i < target.size(); ++i) {
    fit.loss += std::abs(fit.fitted[i] - target[i]);
  }
  return fit;
}

double wi(std::span<const double> p, std::span<const double> p_prime) {
  if (p.size() != p_prime.size()) {
    throw std::invalid_argument("wi: dimension mismatch");
  }
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  // Within a tie in p the best arrangement of p' is descending, which leaves
  // tied positions unconstrained relative to each other.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (p[a] != p[b]) return p[a] > p[b];
    return p_prime[a] > p_prime[b];
  });
  std::vector<double> target(p.size());
  for (std::size_t r = 0; r < order.size(); ++r) target[r] = p_prime[order[r]];
  return isotonic_l1_fit(target).loss / 2.0;
}

double wi_avg(std::span<const double> p, std::span<const double> q) {
  return 0.5 * (wi(p, q) + wi(q, p));
}

DistributionSet build_distributions(std::span<const SampleSet> samples,
                                    long min_count,
                                    std::vector<std::string>* warnings) {
  std::set<DistanceLabel> labels;
  std::map<std::string, std::map<std::string, long>> totals;  // inst -> answer
  for (const auto& c : samples) {
    labels.insert({c.tool, c.tau});
    auto& t = totals[c.instance_id];
    for (std::size_t k = 0; k < c.answers.size(); ++k) t[c.answers[k]] += c.counts[k];
  }
  DistributionSet out;
  out.labels.assign(labels.begin(), labels.end());
  std::map<std::string, std::vector<std::string>> responses;
  for (const auto& [inst, answers] : totals) {
    std::vector<std::string> kept;
    for (const auto& [answer, count] : answers) {
      if (count >= min_count) kept.push_back(answer);
    }
    if (kept.empty()) {
      if (warnings) {
        warnings->push_back("instance " + inst +
                            ": no answer reaches min_count; skipped");
      }
      continue;
    }
    out.instances.push_back(inst);
    responses[inst] = std::move(kept);
  }
  out.dist.assign(out.labels.size(),
                  std::vector<std::optional<std::vector<double>>>(
                      out.instances.size()));
  for (const auto& c : samples) {
    auto inst_it = std::lower_bound(out.instances.begin(), out.instances.end(),
                                    c.instance_id);
    if (inst_it == out.instances.end() || *inst_it != c.instance_id) continue;
    const auto& set = responses[c.instance_id];
    std::vector<double> probs(set.size(), 0.0);
    double mass = 0.0;
    for (std::size_t r = 0; r < set.size(); ++r) {
      probs[r] = static_cast<double>(c.count_of(set[r]));
      mass += probs[r];
    }
    if (mass > 0.0) {
      for (double& v : probs) v /= mass;
    } else {
      std::fill(probs.begin(), probs.end(), 1.0 / static_cast<double>(set.size()));
      if (warnings) {
        warnings->push_back("cell (" + c.tool + ", " + c.tau + ", " +
                            c.instance_id +
                            ") has no mass on the response set; using uniform");
      }
    }
    auto label_it = std::lower_bound(out.labels.begin(), out.labels.end(),
                                     DistanceLabel{c.tool, c.tau});
    out.dist[static_cast<std::size_t>(label_it - out.labels.begin())]
            [static_cast<std::size_t>(inst_it - out.instances.begin())] =
        std::move(probs);
  }
  return out;
}

DistanceMatrix distance_matrix(const DistributionSet& set) {
  const std::size_t l = set.labels.size();
  for (std::size_t a = 0; a < l; ++a) {
    for (std::size_t i = 0; i < set.instances.size(); ++i) {
      if (!set.dist[a][i]) {
        throw std::invalid_argument("missing cell (" + set.labels[a].first +
                                    ", " + set.labels[a].second + ", " +
                                    set.instances[i] + ")");
      }
    }
  }
  if (set.instances.empty()) {
    throw std::invalid_argument("distance_matrix: no instances");
  }
  DistanceMatrix m;
  m.labels = set.labels;
  m.instances = set.instances.size();
  m.d.assign(l, std::vector<double>(l, 0.0));
  for (std::size_t a = 0; a < l; ++a) {
    for (std::size_t b = a + 1; b < l; ++b) {
      double total = 0.0;
      for (std::size_t i = 0; i < set.instances.size(); ++i) {
        total += wi_avg(*set.dist[a][i], *set.dist[b][i]);
      }
      m.d[a][b] = m.d[b][a] = total / static_cast<double>(set.instances.size());
    }
  }
  return m;
}

std::string to_csv(const DistanceMatrix& m) {
  std::string out = "label";
  for (const auto& [tool, variant] : m.labels) {
    out += "," + csv_quote(tool + "/" + variant);
  }
  out += "\n";
  for (std::size_t a = 0; a < m.labels.size(); ++a) {
    out += csv_quote(m.labels[a].first + "/" + m.labels[a].second);
    for (double v : m.d[a]) out += "," + fmt(v);
    out += "\n";
  }
  return out;
}

}  // namespace genco
