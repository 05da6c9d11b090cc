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

#include "cli/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>

namespace genco::cli {

namespace {

// Uniform in [0, 1) from the top 53 bits, identical on every platform.
double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string answer_name(int instance, bool valid, int index) {
  return "i" + std::to_string(instance) + (valid ? "-a" : "-x") +
         std::to_string(index);
}

}  // namespace

CorpusSpec CorpusSpec::standard() {
  CorpusSpec spec;
  spec.tools = {
      {"alpha", 0.35, -2.0, 11},
      {"beta", 0.25, -1.5, 23},
      {"gamma", 0.5, -2.5, 37},
  };
  spec.taus = {"0.25", "0.5", "0.75", "1", "1.5"};
  return spec;
}

std::vector<SampleSet> synthetic_corpus(const CorpusSpec& spec) {
  std::vector<SampleSet> out;
  for (std::size_t t = 0; t < spec.tools.size(); ++t) {
    const ToolProfile& tool = spec.tools[t];
    for (int inst = 0; inst < spec.instances; ++inst) {
      // Tool-specific ranking of the shared valid answers: adjacent swaps.
      std::vector<int> order(static_cast<std::size_t>(spec.valid_answers));
      std::iota(order.begin(), order.end(), 0);
      std::mt19937_64 shuffle(tool.shuffle_seed * 1000003ULL +
                              static_cast<std::uint64_t>(inst));
      for (std::size_t r = 0; r + 1 < order.size(); r += 2) {
        if (unit(shuffle) < 0.5) std::swap(order[r], order[r + 1]);
      }
      std::vector<std::string> names;
      std::vector<int> valid;
      std::vector<double> logits;
      for (int r = 0; r < spec.valid_answers; ++r) {
        names.push_back(answer_name(inst, true, order[r]));
        valid.push_back(1);
        logits.push_back(-tool.sharpness * r);
      }
      for (int j = 0; j < spec.invalid_answers; ++j) {
        names.push_back(answer_name(inst, false, j));
        valid.push_back(0);
        logits.push_back(tool.invalid_logit - 0.05 * j);
      }
      for (std::size_t g = 0; g < spec.taus.size(); ++g) {
        const double tau = std::strtod(spec.taus[g].c_str(), nullptr);
        std::vector<double> cdf(logits.size());
        double acc = 0.0;
        for (std::size_t k = 0; k < logits.size(); ++k) {
          acc += std::exp(logits[k] / tau);
          cdf[k] = acc;
        }
        std::mt19937_64 rng(spec.seed ^ (0x9e3779b97f4a7c15ULL *
                                         (1 + t * 131 + inst * 17 + g)));
        std::map<std::string, std::pair<long, int>> tally;
        for (int draw = 0; draw < spec.samples; ++draw) {
          double x = unit(rng) * acc;
          auto k = static_cast<std::size_t>(
              std::upper_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
          k = std::min(k, cdf.size() - 1);
          auto& slot = tally[names[k]];
          ++slot.first;
          slot.second = valid[k];
        }
        SampleSet cell;
        cell.instance_id = "q" + std::to_string(inst);
        cell.tool = tool.name;
        cell.tau = spec.taus[g];
        for (const auto& [name, entry] : tally) {
          cell.answers.push_back(name);
          cell.counts.push_back(entry.first);
          cell.valid.push_back(entry.second);
          cell.total += entry.first;
        }
        out.push_back(std::move(cell));
      }
    }
  }
  return out;
}

void write_samples_csv(std::span<const SampleSet> cells, std::ostream& out) {
  out << "instance_id,tool,tau,answer,valid,count\n";
  for (const auto& c : cells) {
    for (std::size_t k = 0; k < c.answers.size(); ++k) {
      out << c.instance_id << ',' << c.tool << ',' << c.tau << ','
          << c.answers[k] << ',' << (c.valid[k] > 0.0 ? 1 : 0) << ','
          << c.counts[k] << '\n';
    }
  }
}

}  // namespace genco::cli
