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

// Randomized self-checks behind `genco check`.

#ifndef GENCO_CLI_CHECKS_HPP_
#define GENCO_CLI_CHECKS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace genco::cli {

struct CheckResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  double worst = 0.0;  // largest discrepancy seen
  std::string first_failure;
};

std::vector<CheckResult> run_property_checks(std::uint64_t seed, int cases);

}  // namespace genco::cli

#endif  // GENCO_CLI_CHECKS_HPP_
