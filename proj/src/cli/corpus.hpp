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

// Synthetic answer samples standing in for real model outputs. Each tool has
// a softmax over a shared answer vocabulary; tau is the softmax temperature.

#ifndef GENCO_CLI_CORPUS_HPP_
#define GENCO_CLI_CORPUS_HPP_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "genco/empirical.hpp"

namespace genco::cli {

struct ToolProfile {
  std::string name;
  double sharpness;     // logit drop per rank among valid answers
  double invalid_logit; // logit of each invalid answer
  std::uint64_t shuffle_seed;
};

struct CorpusSpec {
  std::vector<ToolProfile> tools;
  std::vector<std::string> taus;
  int instances = 5;
  int samples = 500;
  int valid_answers = 40;
  int invalid_answers = 40;
  std::uint64_t seed = 20240601;

  static CorpusSpec standard();
};

std::vector<SampleSet> synthetic_corpus(const CorpusSpec& spec);

/// Aggregated CSV form, one row per (cell, answer) with a count column.
void write_samples_csv(std::span<const SampleSet> cells, std::ostream& out);

}  // namespace genco::cli

#endif  // GENCO_CLI_CORPUS_HPP_
