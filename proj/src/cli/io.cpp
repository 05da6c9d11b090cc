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

#include "cli/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace genco::cli {

namespace fs = std::filesystem;

double num(double v) {
  if (!std::isfinite(v)) return v;
  return std::strtod(fmt(v).c_str(), nullptr);
}

json num_or_string(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return num(v);
}

json num_array(std::span<const double> v) {
  json out = json::array();
  for (double x : v) out.push_back(num_or_string(x));
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_atomic(const std::string& path, const std::string& contents) {
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

ScoreFunction score_from_gamma(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Inf") {
    return ScoreFunction::bertrand();
  }
  char* end = nullptr;
  double g = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw ValidationError("gamma must be a positive real or \"inf\", got '" +
                          text + "'");
  }
  try {
    return ScoreFunction::power(g);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(std::string("gamma: ") + e.what());
  }
}

json score_to_json(const ScoreFunction& s) {
  if (s.kind() == ScoreFunction::Kind::kTable) {
    return {{"kind", "table"}, {"values", num_array(s.table_values())}};
  }
  return {{"kind", "power"}, {"gamma", num_or_string(s.gamma())}};
}

GameInstance parse_instance(const json& doc) {
  std::vector<std::string> problems;
  GameInstance g;
  if (!doc.is_object()) throw ValidationError("instance must be a JSON object");

  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    problems.push_back("n: missing or not an integer");
  } else {
    g.n = doc["n"].get<long>();
  }
  if (!doc.contains("d") || !doc["d"].is_array()) {
    problems.push_back("d: missing or not an array");
  } else {
    for (std::size_t k = 0; k < doc["d"].size(); ++k) {
      if (!doc["d"][k].is_number()) {
        problems.push_back("d: entry " + std::to_string(k + 1) +
                           " is not a number");
        g.d.push_back(0.0);
      } else {
        g.d.push_back(doc["d"][k].get<double>());
      }
    }
  }
  if (doc.contains("score")) {
    const json& s = doc["score"];
    std::string kind = s.is_object() ? s.value("kind", "") : "";
    try {
      if (kind == "power") {
        if (!s.contains("gamma")) {
          problems.push_back("score: power needs gamma");
        } else if (s["gamma"].is_string()) {
          g.score = score_from_gamma(s["gamma"].get<std::string>());
        } else if (s["gamma"].is_number()) {
          g.score = ScoreFunction::power(s["gamma"].get<double>());
        } else {
          problems.push_back("score: gamma must be a number or \"inf\"");
        }
      } else if (kind == "table") {
        if (!s.contains("values") || !s["values"].is_array()) {
          problems.push_back("score: table needs a values array");
        } else {
          g.score = ScoreFunction::table(s["values"].get<std::vector<double>>());
        }
      } else {
        problems.push_back("score: kind must be \"power\" or \"table\"");
      }
    } catch (const std::exception& e) {
      problems.push_back(std::string("score: ") + e.what());
    }
  }
  if (doc.contains("rankings")) {
    const json& r = doc["rankings"];
    if (!r.is_array()) {
      problems.push_back("rankings: not an array");
    } else {
      for (std::size_t j = 0; j < r.size(); ++j) {
        std::vector<long> order;
        bool ok = r[j].is_array();
        if (ok) {
          for (const auto& v : r[j]) {
            if (!v.is_number_integer()) {
              ok = false;
              break;
            }
            order.push_back(v.get<long>());
          }
        }
        if (!ok) {
          problems.push_back("ranking " + std::to_string(j + 1) +
                             ": not an array of integers");
        }
        g.rankings.push_back(std::move(order));
      }
    }
  } else {
    // Identity ordering by default.
    std::vector<long> order;
    for (std::size_t k = 0; k < g.d.size(); ++k) order.push_back(static_cast<long>(k) + 1);
    g.rankings.push_back(std::move(order));
  }
  if (problems.empty()) {
    auto report = validate_instance(g);
    problems = report.violations;
  }
  if (!problems.empty()) {
    throw ValidationError("invalid instance", std::move(problems));
  }
  return g;
}

GameInstance load_instance(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ValidationError("instance is not valid JSON: " + std::string(e.what()));
  }
  return parse_instance(doc);
}

json instance_to_json(const GameInstance& g) {
  return {{"n", g.n},
          {"d", num_array(g.d)},
          {"score", score_to_json(g.score)},
          {"rankings", g.rankings}};
}

// --- grid cache -------------------------------------------------------------

json grid_to_json(const GridSolution& g) {
  // Full precision: cached values feed later computations.
  return {{"tool", g.grid.tool},
          {"taus", g.grid.taus},
          {"instances", g.grid.instances},
          {"u", g.grid.u},
          {"welfare", g.grid.welfare},
          {"se", g.grid.se},
          {"min_samples", g.grid.min_samples},
          {"epsilon", g.epsilon},
          {"eq", g.eq},
          {"opt", g.opt}};
}

GridSolution grid_from_json(const json& j) {
  GridSolution g;
  g.grid.tool = j.at("tool").get<std::string>();
  g.grid.taus = j.at("taus").get<std::vector<std::string>>();
  g.grid.instances = j.at("instances").get<std::vector<std::string>>();
  g.grid.u = j.at("u").get<std::vector<std::vector<double>>>();
  g.grid.welfare = j.at("welfare").get<std::vector<double>>();
  g.grid.se = j.at("se").get<std::vector<double>>();
  g.grid.min_samples = j.at("min_samples").get<long>();
  g.epsilon = j.at("epsilon").get<double>();
  g.eq = j.at("eq").get<std::vector<std::size_t>>();
  g.opt = j.at("opt").get<std::size_t>();
  return g;
}

std::string GridCache::path_for(const std::string& key) const {
  return (fs::path(*dir_) / ("grid-" + key + ".json")).string();
}

std::optional<GridSolution> GridCache::load(const std::string& key,
                                            std::vector<std::string>* warnings) {
  if (!dir_) return std::nullopt;
  const std::string path = path_for(key);
  if (!fs::exists(path)) {
    ++misses;
    return std::nullopt;
  }
  try {
    json entry = json::parse(read_file(path));
    const json& payload = entry.at("payload");
    if (entry.at("checksum").get<std::string>() != sha256_hex(payload.dump())) {
      throw std::runtime_error("checksum mismatch");
    }
    GridSolution g = grid_from_json(payload);
    ++hits;
    return g;
  } catch (const std::exception& e) {
    if (warnings) {
      warnings->push_back("cache entry " + path + " is corrupted (" + e.what() +
                          "); recomputing");
    }
    ++misses;
    return std::nullopt;
  }
}

void GridCache::store(const std::string& key, const GridSolution& solution) const {
  if (!dir_) return;
  json payload = grid_to_json(solution);
  json entry = {{"checksum", sha256_hex(payload.dump())}, {"payload", payload}};
  write_atomic(path_for(key), entry.dump());
}

}  // namespace genco::cli
