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

#ifndef GENCO_CLI_APP_HPP_
#define GENCO_CLI_APP_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace genco::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kValidation = 2,
  kNotConverged = 3,
};

/// Entry point shared by the executable and the tests. Artifacts go to the
/// paths named by --out / --out-dir, or to `out` when none is given.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace genco::cli

#endif  // GENCO_CLI_APP_HPP_
