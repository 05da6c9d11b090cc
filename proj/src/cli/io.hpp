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

// File plumbing for the command-line front end: instance JSON, hashing,
// number formatting, atomic writes and the grid cache.

#ifndef GENCO_CLI_IO_HPP_
#define GENCO_CLI_IO_HPP_

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "genco/core.hpp"
#include "genco/empirical.hpp"
#include "json.hpp"

namespace genco::cli {

using nlohmann::json;

/// Raised for bad user input; maps to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::string message,
                           std::vector<std::string> violations = {})
      : std::runtime_error(std::move(message)),
        violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Rounds to 12 significant digits so that dumps print at most 12.
double num(double v);
json num_or_string(double v);  // "inf" / "nan" for non-finite values
json num_array(std::span<const double> v);
std::string fmt(double v);     // %.12g

std::string sha256_hex(const std::string& bytes);
std::string read_file(const std::string& path);

/// Writes via a temporary sibling and rename.
void write_atomic(const std::string& path, const std::string& contents);

/// Parses and validates an instance document; every schema or model
/// violation is collected before throwing ValidationError.
GameInstance parse_instance(const json& doc);
GameInstance load_instance(const std::string& path);
json instance_to_json(const GameInstance& g);

/// "inf" / "infinity" or a positive real.
ScoreFunction score_from_gamma(const std::string& text);
json score_to_json(const ScoreFunction& s);

/// Content-addressed store of grid solutions. Entries carry a checksum of
/// their payload; a mismatch is reported and treated as a miss.
class GridCache {
 public:
  explicit GridCache(std::optional<std::string> dir) : dir_(std::move(dir)) {}

  bool enabled() const { return dir_.has_value(); }
  std::optional<GridSolution> load(const std::string& key,
                                   std::vector<std::string>* warnings);
  void store(const std::string& key, const GridSolution& solution) const;

  int hits = 0;
  int misses = 0;

 private:
  std::string path_for(const std::string& key) const;
  std::optional<std::string> dir_;
};

json grid_to_json(const GridSolution& g);
GridSolution grid_from_json(const json& j);

}  // namespace genco::cli

#endif  // GENCO_CLI_IO_HPP_
