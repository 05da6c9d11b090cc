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

#include "cli/app.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "cli/checks.hpp"
#include "cli/io.hpp"
#include "genco/distance.hpp"
#include "genco/dynamics.hpp"
#include "genco/empirical.hpp"
#include "genco/market.hpp"
#include "genco/reduce.hpp"
#include "genco/solve.hpp"

#ifndef GENCO_VERSION
#define GENCO_VERSION "dev"
#endif

namespace genco::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  // instance selection
  std::string instance;
  long n = 0;
  std::vector<double> d;
  std::string gamma = "1";
  std::vector<std::string> gammas;
  // outputs
  std::string out;
  std::string out_dir;
  std::string cache_dir;
  // solver knobs
  long tight = 0;
  int starts = 20;
  std::uint64_t seed = 1;
  double epsilon = -1.0;
  int max_rounds = 1000;
  int max_iterations = 500;
  std::vector<long> tool_of;
  // samples
  std::string samples;
  std::vector<long> ns;
  std::vector<std::string> tools;
  std::string tool1;
  std::string tool2;
  long min_count = 10;
  int cases = 50;
};

struct Context {
  std::string command;
  json config = json::object();
  json inputs = json::object();
  std::vector<std::string> warnings;
  std::ostream* out;
  std::ostream* err;
};

json meta(const Context& ctx) {
  return {{"tool", "genco"},
          {"version", GENCO_VERSION},
          {"command", ctx.command},
          {"config", ctx.config},
          {"input_sha256", ctx.inputs}};
}

std::string csv_header(const Context& ctx) {
  std::string h = "# genco " + std::string(GENCO_VERSION) + " " + ctx.command + "\n";
  h += "# config: " + ctx.config.dump() + "\n";
  h += "# input_sha256: " + ctx.inputs.dump() + "\n";
  return h;
}

void emit(const Context& ctx, const std::string& path, const std::string& body) {
  if (path.empty()) {
    *ctx.out << body;
  } else {
    write_atomic(path, body);
  }
}

void emit_json(const Context& ctx, const std::string& path, json doc) {
  doc["meta"] = meta(ctx);
  emit(ctx, path, doc.dump(2) + "\n");
}

void flush_warnings(Context& ctx) {
  for (const auto& w : ctx.warnings) *ctx.err << "warning: " << w << "\n";
  ctx.warnings.clear();
}

std::string hash_input(Context& ctx, const std::string& path) {
  std::string bytes = read_file(path);
  ctx.inputs[path] = sha256_hex(bytes);
  return bytes;
}

// Instance from --instance or from --n/--d/--gamma.
GameInstance instance_from(Context& ctx, const Options& o) {
  if (!o.instance.empty()) {
    hash_input(ctx, o.instance);
    ctx.config["instance"] = o.instance;
    return load_instance(o.instance);
  }
  if (o.d.empty()) throw ValidationError("give --instance or --n and --d");
  json doc = {{"n", o.n}, {"d", o.d}};
  ScoreFunction s = score_from_gamma(o.gamma);
  doc["score"] = score_to_json(s);
  if (s.is_infinite()) doc["score"]["gamma"] = "inf";
  GameInstance g = parse_instance(doc);
  ctx.config["instance"] = instance_to_json(g);
  return g;
}

json blocks_json(const PavaResult& r) {
  json out = json::array();
  for (auto [b, e] : r.blocks) out.push_back({b + 1, e});  // 1-based, inclusive
  return out;
}

// Solves in the first ranking's canonical order and maps back.
int cmd_solve(Context& ctx, const Options& o, bool eq) {
  GameInstance g = instance_from(ctx, o);
  Ranking ranking = Ranking::from_one_based(g.rankings.front());
  ValueVector d(g.d);
  ValueVector canon = canonicalize(d, ranking);
  SymmetricSolution sol = eq ? solve_eq(g.n, canon, g.score)
                             : solve_opt(g.n, canon, g.score);
  auto probs = decanonicalize(sol.strategy.probs(), ranking);
  PavaResult pava = pava_reduce(canon.values());
  json doc = {{"strategy", num_array(probs)},
              {"level", num_or_string(sol.level)},
              {"per_player_utility", num_or_string(sol.per_player_utility)},
              {"welfare", num_or_string(sol.welfare)},
              {"score_class", to_string(classify_score(g.score))},
              {"reduced_d", num_array(pava.reduced)},
              {"pava_blocks", blocks_json(pava)}};
  emit_json(ctx, o.out, doc);
  return kOk;
}

int cmd_limits(Context& ctx, const Options& o) {
  if (o.d.empty()) throw ValidationError("--d is required");
  ValueVector d(o.d);
  std::vector<std::string> gammas = o.gammas.empty()
                                        ? std::vector<std::string>{"1"}
                                        : o.gammas;
  std::string body = csv_header(ctx) + "gamma,zero_in_support";
  for (std::size_t k = 0; k < d.size(); ++k) body += ",p" + std::to_string(k + 1);
  body += "\n";
  for (const auto& text : gammas) {
    ScoreFunction s = score_from_gamma(text);
    bool zero = false;
    Strategy p = s.is_infinite() ? limit_dist_uniform(d, &zero)
                                 : limit_dist(d, s.gamma());
    body += (s.is_infinite() ? std::string("inf") : fmt(s.gamma())) + "," +
            (zero ? "1" : "0");
    for (double v : p.probs()) body += "," + fmt(v);
    body += "\n";
  }
  emit(ctx, o.out, body);
  return kOk;
}

int cmd_poa(Context& ctx, const Options& o) {
  if (o.tight > 0) {
    TightInstance t = poa_tight_instance(o.tight);
    const ScoreFunction s = ScoreFunction::identity();
    std::vector<Ranking> tools{Ranking::identity(t.d.size())};
    double high = welfare_of(t.high_welfare, t.d, s);
    double low = welfare_of(t.equilibrium, t.d, s);
    // All players share one strategy, so one player's audit covers them.
    auto values = conditional_values(t.equilibrium, 0, t.d, s);
    double best = 0.0;
    best_prefix_vertex(values, tools[0], &best);
    double gain = best - values[0];
    const double n = static_cast<double>(o.tight);
    json doc = {{"n", o.tight},
                {"K", t.d.size()},
                {"high_welfare", num(high)},
                {"eq_welfare", num(low)},
                {"ratio", num(high / low)},
                {"bound", num(2.0 - 3.0 / (2.0 * n) - 1.0 / (n * n))},
                {"eq_max_gain", num(gain)},
                {"eq_verified", gain <= 1e-9}};
    emit_json(ctx, o.out, doc);
    return kOk;
  }
  GameInstance g = instance_from(ctx, o);
  Ranking ranking = Ranking::from_one_based(g.rankings.front());
  ValueVector canon = canonicalize(ValueVector(g.d), ranking);
  PoaReport r = poa_estimate(g.n, canon, g.score, o.starts, o.seed);
  json doc = {{"opt_welfare", num(r.opt_welfare)},
              {"eq_welfare", num(r.eq_welfare)},
              {"ratio", num(r.ratio)},
              {"eq_converged", r.eq_converged},
              {"note", "opt_welfare is the best welfare found, a lower bound on "
                       "the optimum"}};
  emit_json(ctx, o.out, doc);
  return r.eq_converged ? kOk : kNotConverged;
}

int cmd_dynamics(Context& ctx, const Options& o) {
  GameInstance g = instance_from(ctx, o);
  std::vector<Ranking> tools;
  for (const auto& r : g.rankings) tools.push_back(Ranking::from_one_based(r));
  std::vector<std::size_t> tool_of(static_cast<std::size_t>(g.n), 0);
  if (!o.tool_of.empty()) {
    if (static_cast<long>(o.tool_of.size()) != g.n) {
      throw ValidationError("--tool-of needs one entry per player");
    }
    for (std::size_t i = 0; i < tool_of.size(); ++i) {
      if (o.tool_of[i] < 1 || o.tool_of[i] > static_cast<long>(tools.size())) {
        throw ValidationError("--tool-of entry " + std::to_string(i + 1) +
                              " names no ranking");
      }
      tool_of[i] = static_cast<std::size_t>(o.tool_of[i] - 1);
    }
  }
  const double eps = o.epsilon >= 0.0 ? o.epsilon : 1e-8;
  ValueVector d(g.d);
  std::mt19937_64 rng(o.seed);
  json runs = json::array();
  bool all_converged = true;
  for (int start = 0; start < std::max(1, o.starts); ++start) {
    StrategyProfile p;
    for (std::size_t i = 0; i < tool_of.size(); ++i) {
      p.columns.push_back(random_strategy(tools[tool_of[i]], rng));
      p.tool_of.push_back(tool_of[i]);
    }
    BrReport r = br_dynamics(p, tools, d, g.score, eps, o.max_rounds);
    all_converged &= r.converged;
    json profile = json::array();
    json utilities = json::array();
    for (std::size_t i = 0; i < r.profile.players(); ++i) {
      profile.push_back(num_array(r.profile.columns[i].probs()));
      utilities.push_back(num(utility_of(r.profile, i, d, g.score)));
    }
    auto audit = check_equilibrium(r.profile, tools, d, g.score, eps);
    runs.push_back({{"start", start},
                    {"converged", r.converged},
                    {"rounds", r.rounds},
                    {"potential_trace", num_array(r.potential_trace)},
                    {"profile", profile},
                    {"utilities", utilities},
                    {"welfare", num(welfare_of(r.profile, d, g.score))},
                    {"max_gain", num(audit.worst_gain)}});
  }
  emit_json(ctx, o.out, {{"epsilon", eps}, {"seed", o.seed}, {"runs", runs}});
  return all_converged ? kOk : kNotConverged;
}

int cmd_market(Context& ctx, const Options& o) {
  GameInstance g = instance_from(ctx, o);
  std::vector<Ranking> tools;
  for (const auto& r : g.rankings) tools.push_back(Ranking::from_one_based(r));
  if (tools.size() > 2) {
    throw ValidationError("market supports one or two rankings");
  }
  MarketOptions mo;
  if (o.epsilon >= 0.0) mo.epsilon = o.epsilon;
  mo.max_iterations = o.max_iterations;
  ValueVector d(g.d);
  MarketSearch search = find_partial_sym_equilibria(g.n, tools, d, g.score, mo);
  json eqs = json::array();
  for (const auto& e : search.equilibria) {
    json strategies = json::array();
    for (std::size_t j = 0; j < e.strategies.size(); ++j) {
      strategies.push_back(e.counts[j] > 0 ? num_array(e.strategies[j].probs())
                                           : json(nullptr));
    }
    eqs.push_back({{"counts", e.counts},
                   {"strategies", strategies},
                   {"utilities", num_array(e.utilities)},
                   {"max_gain", num(e.max_gain)}});
  }
  json splits = json::array();
  bool converged = true;
  for (const auto& s : search.splits) {
    converged &= s.status != SplitStatus::kNotConverged;
    splits.push_back({{"counts", s.counts},
                      {"status", to_string(s.status)},
                      {"iterations", s.iterations},
                      {"max_gain", num(s.max_gain)}});
  }
  MarketShareReport shares = market_share_bounds(search.equilibria, tools.size());
  json share_doc = json::array();
  for (const auto& t : shares.tools) {
    share_doc.push_back({{"shares", std::vector<long>(t.shares.begin(), t.shares.end())},
                         {"max", t.empty ? json(nullptr) : json(t.share_max)},
                         {"min", t.empty ? json(nullptr) : json(t.share_min)},
                         {"empty", t.empty}});
  }
  emit_json(ctx, o.out,
            {{"epsilon", mo.epsilon},
             {"equilibria", eqs},
             {"splits", splits},
             {"market_shares", share_doc},
             {"note", shares.note}});
  return converged ? kOk : kNotConverged;
}

std::vector<SampleSet> samples_from(Context& ctx, const Options& o) {
  if (o.samples.empty()) throw ValidationError("--samples is required");
  hash_input(ctx, o.samples);
  ctx.config["samples"] = o.samples;
  try {
    return load_samples(o.samples, &ctx.warnings);
  } catch (const SampleError& e) {
    throw ValidationError(e.what());
  }
}

std::map<std::string, std::vector<SampleSet>> by_tool(
    const std::vector<SampleSet>& cells) {
  std::map<std::string, std::vector<SampleSet>> out;
  for (const auto& c : cells) out[c.tool].push_back(c);
  return out;
}

std::string cells_digest(const std::vector<SampleSet>& cells) {
  std::ostringstream s;
  for (const auto& c : cells) {
    s << c.tool << '\x1f' << c.tau << '\x1f' << c.instance_id << '\x1e';
    for (std::size_t k = 0; k < c.answers.size(); ++k) {
      s << c.answers[k] << '\x1f' << c.counts[k] << '\x1f' << c.valid[k] << '\x1e';
    }
  }
  return sha256_hex(s.str());
}

int cmd_estimate(Context& ctx, const Options& o) {
  auto cells = samples_from(ctx, o);
  if (o.ns.empty()) throw ValidationError("--n is required");
  ScoreFunction s = score_from_gamma(o.gamma);
  std::optional<std::string> cache_dir;
  if (const char* env = std::getenv("GENCO_CACHE_DIR"); env && *env) {
    cache_dir = env;
  } else if (!o.cache_dir.empty()) {
    cache_dir = o.cache_dir;
  }
  GridCache cache(cache_dir);

  auto grouped = by_tool(cells);
  std::string grid_csv = csv_header(ctx) + "tool,n,tau_dev,tau_bg,u\n";
  std::string welfare_csv = csv_header(ctx) + "tool,n,tau,welfare,se,u_self\n";
  json report = json::array();
  for (const auto& [tool, mine] : grouped) {
    if (!o.tools.empty() &&
        std::find(o.tools.begin(), o.tools.end(), tool) == o.tools.end()) {
      continue;
    }
    const std::string digest = cells_digest(mine);
    for (long n : o.ns) {
      json key_doc = {{"version", GENCO_VERSION}, {"tool", tool},
                      {"cells", digest},          {"n", n},
                      {"score", score_to_json(s)}, {"epsilon", o.epsilon}};
      const std::string key = sha256_hex(key_doc.dump());
      std::optional<GridSolution> sol = cache.load(key, &ctx.warnings);
      if (!sol) {
        try {
          sol = grid_solution(mine, n, s, o.epsilon);
        } catch (const std::invalid_argument& e) {
          throw ValidationError("tool " + tool + ", n=" + std::to_string(n) +
                                ": " + e.what());
        }
        cache.store(key, *sol);
      }
      const UtilityGrid& g = sol->grid;
      for (std::size_t a = 0; a < g.taus.size(); ++a) {
        for (std::size_t b = 0; b < g.taus.size(); ++b) {
          grid_csv += tool + "," + std::to_string(n) + "," + g.taus[a] + "," +
                      g.taus[b] + "," + fmt(g.u[a][b]) + "\n";
        }
        welfare_csv += tool + "," + std::to_string(n) + "," + g.taus[a] + "," +
                       fmt(g.welfare[a]) + "," + fmt(g.se[a]) + "," +
                       fmt(g.u[a][a]) + "\n";
      }
      json eq = json::array();
      for (auto t : sol->eq) eq.push_back(g.taus[t]);
      report.push_back({{"tool", tool},
                        {"n", n},
                        {"tau_eq", eq},
                        {"tau_opt", g.taus[sol->opt]},
                        {"welfare_opt", num(g.welfare[sol->opt])},
                        {"epsilon", num(sol->epsilon)},
                        {"instances", g.instances.size()},
                        {"min_samples", g.min_samples}});
    }
  }
  if (cache.enabled()) {
    *ctx.err << "cache: " << cache.hits << " hit(s), " << cache.misses
             << " miss(es)\n";
  }
  json doc = {{"grids", report},
              {"score", score_to_json(s)},
              {"variance_note",
               "standard errors use the conservative sqrt(1/(S R)) bound; "
               "plug-in variance estimates are not implemented"}};
  if (o.out_dir.empty()) {
    doc["meta"] = meta(ctx);
    *ctx.out << doc.dump(2) << "\n";
  } else {
    const fs::path dir(o.out_dir);
    write_atomic((dir / "utility_grid.csv").string(), grid_csv);
    write_atomic((dir / "welfare.csv").string(), welfare_csv);
    emit_json(ctx, (dir / "estimate.json").string(), doc);
  }
  return kOk;
}

int cmd_pairwise(Context& ctx, const Options& o) {
  auto cells = samples_from(ctx, o);
  if (o.ns.empty()) throw ValidationError("--n is required");
  auto grouped = by_tool(cells);
  for (const auto* name : {&o.tool1, &o.tool2}) {
    if (!grouped.count(*name)) {
      throw ValidationError("tool '" + *name + "' not found in samples");
    }
  }
  ScoreFunction s = score_from_gamma(o.gamma);
  std::string body = csv_header(ctx) + "n,m1,tau1,m2,tau2,u1,u2,max_gain,epsilon\n";
  for (long n : o.ns) {
    EmpiricalMarket m;
    try {
      m = pairwise_market_empirical(grouped[o.tool1], grouped[o.tool2], n, s,
                                    o.epsilon);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
    for (const auto& e : m.equilibria) {
      body += std::to_string(n) + "," + std::to_string(e.m1) + "," + e.tau1 +
              "," + std::to_string(e.m2) + "," + e.tau2 + "," + fmt(e.u1) + "," +
              fmt(e.u2) + "," + fmt(e.max_gain) + "," + fmt(m.epsilon) + "\n";
    }
  }
  emit(ctx, o.out, body);
  return kOk;
}

int cmd_distance(Context& ctx, const Options& o) {
  auto cells = samples_from(ctx, o);
  DistributionSet set = build_distributions(cells, o.min_count, &ctx.warnings);
  DistanceMatrix m;
  try {
    m = distance_matrix(set);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  std::string body = csv_header(ctx) +
                     "# instances: " + std::to_string(m.instances) + "\n" +
                     "# note: the fitted reference vector need not sum to 1\n" +
                     to_csv(m);
  emit(ctx, o.out, body);
  return kOk;
}

int cmd_check(Context& ctx, const Options& o) {
  auto results = run_property_checks(o.seed, o.cases);
  json doc = json::array();
  bool ok = true;
  for (const auto& r : results) {
    ok &= r.failures == 0;
    doc.push_back({{"suite", r.name},
                   {"cases", r.cases},
                   {"failures", r.failures},
                   {"worst", num(r.worst)},
                   {"first_failure", r.first_failure}});
  }
  emit_json(ctx, o.out, {{"seed", o.seed}, {"suites", doc}, {"passed", ok}});
  return ok ? kOk : kCheckFailed;
}

void error_json(std::ostream& out, const std::string& kind,
                const std::string& message,
                const std::vector<std::string>& violations = {}) {
  json e = {{"error", {{"kind", kind}, {"message", message}}}};
  if (!violations.empty()) e["error"]["violations"] = violations;
  out << e.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Equilibria of generative-tool competition games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", GENCO_VERSION);
  Options o;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--instance", o.instance, "instance JSON file");
    sub->add_option("--n", o.n, "number of players");
    sub->add_option("--d", o.d, "type values")->delimiter(',');
    sub->add_option("--gamma", o.gamma, "score exponent, or inf");
    sub->add_option("--out", o.out, "output file (stdout when absent)");
  };
  auto* solve_eq_cmd = app.add_subcommand("solve-eq", "symmetric equilibrium");
  add_instance(solve_eq_cmd);
  auto* solve_opt_cmd = app.add_subcommand("solve-opt", "symmetric optimum");
  add_instance(solve_opt_cmd);

  auto* limits_cmd = app.add_subcommand("limits", "large-n limit distributions");
  limits_cmd->add_option("--d", o.d, "type values")->delimiter(',')->required();
  limits_cmd->add_option("--gammas", o.gammas, "score exponents")->delimiter(',');
  limits_cmd->add_option("--out", o.out, "output CSV");

  auto* poa_cmd = app.add_subcommand("poa", "price of anarchy");
  add_instance(poa_cmd);
  poa_cmd->add_option("--tight", o.tight, "evaluate the tight family at this n");
  poa_cmd->add_option("--starts", o.starts, "random starts for the optimum search");
  poa_cmd->add_option("--seed", o.seed, "64-bit seed");

  auto* dyn_cmd = app.add_subcommand("dynamics", "best-response dynamics");
  add_instance(dyn_cmd);
  dyn_cmd->add_option("--starts", o.starts, "random starting profiles")
      ->default_val(1);
  dyn_cmd->add_option("--seed", o.seed, "64-bit seed");
  dyn_cmd->add_option("--epsilon", o.epsilon, "switching threshold");
  dyn_cmd->add_option("--max-rounds", o.max_rounds, "round cap");
  dyn_cmd->add_option("--tool-of", o.tool_of, "1-based ranking per player")
      ->delimiter(',');

  auto* market_cmd = app.add_subcommand("market", "partially symmetric equilibria");
  add_instance(market_cmd);
  market_cmd->add_option("--epsilon", o.epsilon, "audit tolerance");
  market_cmd->add_option("--max-iterations", o.max_iterations, "fixed-point cap");

  auto add_samples = [&](CLI::App* sub) {
    sub->add_option("--samples", o.samples, "sample CSV")->required();
  };
  auto* est_cmd = app.add_subcommand("estimate", "empirical tau grid");
  add_samples(est_cmd);
  est_cmd->add_option("--n", o.ns, "player counts")->delimiter(',')->required();
  est_cmd->add_option("--gamma", o.gamma, "score exponent, or inf");
  est_cmd->add_option("--tool", o.tools, "restrict to these tools")->delimiter(',');
  est_cmd->add_option("--epsilon", o.epsilon, "equilibrium tolerance");
  est_cmd->add_option("--out-dir", o.out_dir, "artifact directory");
  est_cmd->add_option("--cache-dir", o.cache_dir, "grid cache directory");

  auto* pair_cmd = app.add_subcommand("pairwise", "empirical two-tool market");
  add_samples(pair_cmd);
  pair_cmd->add_option("--tool1", o.tool1, "first tool")->required();
  pair_cmd->add_option("--tool2", o.tool2, "second tool")->required();
  pair_cmd->add_option("--n", o.ns, "player counts")->delimiter(',')->required();
  pair_cmd->add_option("--gamma", o.gamma, "score exponent, or inf");
  pair_cmd->add_option("--epsilon", o.epsilon, "equilibrium tolerance");
  pair_cmd->add_option("--out", o.out, "output CSV");

  auto* dist_cmd = app.add_subcommand("distance", "WI distance matrix");
  add_samples(dist_cmd);
  dist_cmd->add_option("--min-count", o.min_count, "response-set threshold");
  dist_cmd->add_option("--out", o.out, "output CSV");

  auto* check_cmd = app.add_subcommand("check", "randomized property suites");
  check_cmd->add_option("--seed", o.seed, "64-bit seed");
  check_cmd->add_option("--cases", o.cases, "cases per suite");
  check_cmd->add_option("--out", o.out, "output JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << GENCO_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    error_json(out, "usage", e.what());
    return kValidation;
  }

  CLI::App* sub = app.get_subcommands().front();
  Context ctx{sub->get_name(), json::object(), json::object(), {}, &out, &err};
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    auto values = opt->results();
    ctx.config[opt->get_name().substr(2)] =
        values.size() == 1 ? json(values.front()) : json(values);
  }
  const bool eq_seed = sub == dyn_cmd || sub == poa_cmd || sub == check_cmd;
  if (eq_seed) ctx.config["seed"] = std::to_string(o.seed);

  int code = kOk;
  try {
    if (sub == solve_eq_cmd) code = cmd_solve(ctx, o, true);
    else if (sub == solve_opt_cmd) code = cmd_solve(ctx, o, false);
    else if (sub == limits_cmd) code = cmd_limits(ctx, o);
    else if (sub == poa_cmd) code = cmd_poa(ctx, o);
    else if (sub == dyn_cmd) code = cmd_dynamics(ctx, o);
    else if (sub == market_cmd) code = cmd_market(ctx, o);
    else if (sub == est_cmd) code = cmd_estimate(ctx, o);
    else if (sub == pair_cmd) code = cmd_pairwise(ctx, o);
    else if (sub == dist_cmd) code = cmd_distance(ctx, o);
    else if (sub == check_cmd) code = cmd_check(ctx, o);
  } catch (const ValidationError& e) {
    flush_warnings(ctx);
    error_json(out, "validation", e.what(), e.violations());
    return kValidation;
  } catch (const std::invalid_argument& e) {
    flush_warnings(ctx);
    error_json(out, "validation", e.what());
    return kValidation;
  }
  flush_warnings(ctx);
  return code;
}

}  // namespace genco::cli
