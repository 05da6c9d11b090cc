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

// Regenerates data/synthetic_samples.csv.
//   genco_make_corpus [output.csv]

#include <fstream>
#include <iostream>
#include <sstream>

#include "cli/corpus.hpp"
#include "cli/io.hpp"

int main(int argc, char** argv) {
  auto cells = genco::cli::synthetic_corpus(genco::cli::CorpusSpec::standard());
  std::ostringstream csv;
  genco::cli::write_samples_csv(cells, csv);
  if (argc > 1) {
    genco::cli::write_atomic(argv[1], csv.str());
  } else {
    std::cout << csv.str();
  }
  return 0;
}
