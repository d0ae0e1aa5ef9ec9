// Copyright 2026 The Budget Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// budgetgame: command-line front end for the budget_games library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "budget_games/dynamics.h"
#include "budget_games/equilibria.h"
#include "budget_games/errors.h"
#include "budget_games/game.h"
#include "budget_games/generators.h"
#include "budget_games/instance_io.h"
#include "budget_games/optimize.h"
#include "budget_games/rational.h"
#include "budget_games/utility.h"

namespace bg = budget_games;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

// Bad flag values detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string Show(const bg::Rational& value) {
  char approx[32];
  std::snprintf(approx, sizeof approx, "%.10g", value.ToDouble());
  return value.ToString() + " (" + approx + ")";
}

std::string ShowRatio(const std::optional<bg::Rational>& ratio) {
  return ratio ? Show(*ratio) : "inf";
}

Json RatioJson(const std::optional<bg::Rational>& ratio) {
  return ratio ? bg::RationalToJson(*ratio) : Json("inf");
}

bg::Rational ParseRationalFlag(const std::string& text,
                               const std::string& flag) {
  try {
    return bg::Rational::Parse(text);
  } catch (const bg::ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::pair<bg::Rational, bg::Rational> ParseRange(const std::string& text,
                                                 const std::string& flag) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw UsageError(flag + ": expected LOW:HIGH");
  }
  return {ParseRationalFlag(text.substr(0, colon), flag),
          ParseRationalFlag(text.substr(colon + 1), flag)};
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

bg::InstanceDocument LoadInstance(const std::string& path) {
  return bg::ParseInstance(bg::ReadTextFile(path),
                           path == "-" ? "<stdin>" : path);
}

bg::GameState StartState(const bg::InstanceDocument& doc) {
  return doc.initial_state ? *doc.initial_state : bg::DefaultState(doc.game);
}

void WriteText(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw bg::Error("cannot write '" + path + "'");
  file << text;
}

std::string StrategyText(const bg::BudgetGame& game, bg::PlayerIndex p, int s) {
  std::string out = "{";
  const auto& tasks = game.player(p).strategies[s];
  for (size_t k = 0; k < tasks.size(); ++k) {
    if (k > 0) out += ",";
    out += game.task(tasks[k]).id;
  }
  return out + "}";
}

Json ProfileJson(const bg::BudgetGame& game,
                 const bg::StrategyProfile& profile) {
  Json out = Json::object();
  for (bg::PlayerIndex p = 0; p < game.num_players(); ++p) {
    out[game.player(p).id] = profile[p];
  }
  return out;
}

void PrintProfile(const bg::BudgetGame& game,
                  const bg::StrategyProfile& profile) {
  for (bg::PlayerIndex p = 0; p < game.num_players(); ++p) {
    std::cout << "  " << game.player(p).id << ": strategy " << profile[p] << " "
              << StrategyText(game, p, profile[p]) << "\n";
  }
}

// ---------------------------------------------------------------------------
// Commands.

struct CommonOptions {
  std::string file = "-";
  bool json = false;
};

void RunEval(const CommonOptions& common, const std::string& state_file) {
  const bg::InstanceDocument doc = LoadInstance(common.file);
  const bg::GameState state =
      state_file.empty()
          ? StartState(doc)
          : bg::ParseState(doc.game, bg::ReadTextFile(state_file), state_file);
  const auto violations = bg::CheckValidity(doc.game, state);
  if (common.json) {
    Json utilities = Json::object();
    for (bg::PlayerIndex p = 0; p < doc.game.num_players(); ++p) {
      utilities[doc.game.player(p).id] =
          bg::RationalToJson(bg::PlayerUtility(doc.game, state, p));
    }
    Json out;
    out["variant"] = std::string(bg::VariantName(doc.game.variant()));
    out["state"] = bg::StateToJson(doc.game, state);
    out["utilities"] = std::move(utilities);
    out["welfare"] = bg::RationalToJson(bg::SocialWelfare(doc.game, state));
    out["valid"] = violations.empty();
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "variant: " << bg::VariantName(doc.game.variant()) << "\n";
  std::cout << "player  strategy  utility\n";
  for (bg::PlayerIndex p = 0; p < doc.game.num_players(); ++p) {
    std::cout << doc.game.player(p).id << "  " << state.profile[p] << " "
              << StrategyText(doc.game, p, state.profile[p]) << "  "
              << Show(bg::PlayerUtility(doc.game, state, p)) << "\n";
  }
  std::cout << "welfare: " << Show(bg::SocialWelfare(doc.game, state)) << "\n";
  std::cout << "valid: " << (violations.empty() ? "yes" : "no") << "\n";
}

void RunDynamicsCommand(const CommonOptions& common, bg::Scheduler scheduler,
                        bg::TieBreak rule, int max_steps,
                        const std::string& trace_file) {
  const bg::InstanceDocument doc = LoadInstance(common.file);
  const bg::DynamicsTrace trace =
      bg::RunDynamics(doc.game, StartState(doc), scheduler, rule, max_steps);
  const Json trace_json = bg::TraceToJson(doc.game, trace, scheduler);
  if (!trace_file.empty()) WriteText(trace_file, trace_json.dump(2) + "\n");
  const bool converged = trace.terminal == bg::Terminal::kConverged;
  const bg::Rational welfare = bg::SocialWelfare(doc.game, trace.final_state);
  if (common.json) {
    Json out;
    out["terminal"] = trace_json["terminal"];
    out["step_count"] = trace.steps.size();
    out["final_welfare"] = bg::RationalToJson(welfare);
    out["final_state"] = trace_json["final_state"];
    if (doc.game.variant() == bg::Variant::kOrdered) {
      out["lexicographic_progress"] = bg::LexicographicProgress(trace);
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "terminal: " << (converged ? "converged" : "step_cap_reached")
            << "\n";
  std::cout << "steps: " << trace.steps.size() << "\n";
  std::cout << "final welfare: " << Show(welfare) << "\n";
  std::cout << "final profile:\n";
  PrintProfile(doc.game, trace.final_state.profile);
}

void RunEquilibria(const CommonOptions& common, bg::EquilibriumKind kind,
                   bg::SearchMode search, bg::TieBreak rule) {
  const bg::InstanceDocument doc = LoadInstance(common.file);
  const auto found = bg::EnumerateEquilibria(doc.game, kind, search, rule);
  if (common.json) {
    Json list = Json::array();
    for (const auto& eq : found) {
      list.push_back({{"state", bg::StateToJson(doc.game, eq.state)},
                      {"welfare", bg::RationalToJson(eq.welfare)}});
    }
    Json out;
    out["kind"] = std::string(bg::EquilibriumKindName(kind));
    out["search"] = std::string(bg::SearchModeName(search));
    out["count"] = found.size();
    out["equilibria"] = std::move(list);
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << found.size() << " " << bg::EquilibriumKindName(kind)
            << " equilibria (search " << bg::SearchModeName(search) << ")\n";
  for (size_t k = 0; k < found.size(); ++k) {
    std::cout << "#" << k + 1 << " welfare " << Show(found[k].welfare) << "\n";
    PrintProfile(doc.game, found[k].state.profile);
  }
}

void RunMetrics(const CommonOptions& common, bg::EquilibriumKind kind,
                std::optional<bg::SearchMode> search, bg::TieBreak rule) {
  const bg::InstanceDocument doc = LoadInstance(common.file);
  const bg::PoAReport report = bg::MeasurePoA(doc.game, kind, search, rule);
  if (common.json) {
    Json out;
    out["kind"] = std::string(bg::EquilibriumKindName(kind));
    out["opt"] = bg::RationalToJson(report.opt_welfare);
    out["best_eq"] = bg::RationalToJson(report.best_eq_welfare);
    out["worst_eq"] = bg::RationalToJson(report.worst_eq_welfare);
    out["poa"] = RatioJson(report.poa);
    out["pos"] = RatioJson(report.pos);
    out["eq_count"] = report.eq_count;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "opt: " << Show(report.opt_welfare) << "\n"
            << "best equilibrium: " << Show(report.best_eq_welfare) << "\n"
            << "worst equilibrium: " << Show(report.worst_eq_welfare) << "\n"
            << "poa: " << ShowRatio(report.poa) << "\n"
            << "pos: " << ShowRatio(report.pos) << "\n"
            << "equilibria: " << report.eq_count << "\n";
}

bg::MatroidSpec ParseMatroidFlag(const bg::BudgetGame& game,
                                 const std::string& text) {
  bg::MatroidSpec spec{std::vector<int>(game.num_players(), -1)};
  if (text.find('=') == std::string::npos) {
    try {
      spec.limits.assign(game.num_players(), std::stoi(text));
    } catch (const std::exception&) {
      throw UsageError("--matroid: expected K or PLAYER=K,...");
    }
    return spec;
  }
  for (const std::string& item : SplitList(text)) {
    const size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--matroid: expected PLAYER=K, got '" + item + "'");
    }
    int k;
    try {
      k = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("--matroid: bad limit in '" + item + "'");
    }
    spec.limits[game.PlayerByName(item.substr(0, eq))] = k;
  }
  for (bg::PlayerIndex p = 0; p < game.num_players(); ++p) {
    if (spec.limits[p] < 0) {
      throw UsageError("--matroid: no limit for player '" + game.player(p).id +
                       "'");
    }
  }
  return spec;
}

void RunOptimize(const CommonOptions& common, bool greedy,
                 const std::string& matroid_text) {
  const bg::InstanceDocument doc = LoadInstance(common.file);
  const bg::Optimum opt = bg::BruteForceOptimum(doc.game);
  std::optional<bg::Optimum> approx;
  if (greedy) {
    std::optional<bg::MatroidSpec> spec = doc.matroid;
    if (!matroid_text.empty()) spec = ParseMatroidFlag(doc.game, matroid_text);
    if (!spec) {
      throw UsageError("--greedy needs --matroid or a matroid in the instance");
    }
    bg::ValidateMatroidSpec(doc.game, *spec);
    approx = bg::GreedyWelfare(doc.game, *spec);
  }
  std::optional<bg::Rational> ratio;
  if (approx) {
    ratio =
        opt.welfare.IsZero() ? bg::Rational(1) : approx->welfare / opt.welfare;
  }
  if (common.json) {
    Json out;
    out["optimum"] = {{"profile", ProfileJson(doc.game, opt.profile)},
                      {"welfare", bg::RationalToJson(opt.welfare)}};
    if (approx) {
      out["greedy"] = {{"profile", ProfileJson(doc.game, approx->profile)},
                       {"welfare", bg::RationalToJson(approx->welfare)}};
      out["ratio"] = bg::RationalToJson(*ratio);
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "optimal welfare: " << Show(opt.welfare) << "\n";
  PrintProfile(doc.game, opt.profile);
  if (approx) {
    std::cout << "greedy welfare: " << Show(approx->welfare) << "\n";
    PrintProfile(doc.game, approx->profile);
    std::cout << "greedy / optimal: " << Show(*ratio) << "\n";
  }
}

// ---------------------------------------------------------------------------
// Generators.

struct GenerateOptions {
  std::string output = "-";
  std::string variant = "standard";
  // coverage / x3c-ne
  std::string universe;
  std::vector<std::string> sets;
  int w = 1;
  std::string gamma, delta;
  std::string wiring = "per_set";
  // PoA families and expo
  int n = 1;
  std::string eps = "1/10";
  std::string b = "1";
  int copies = 1;
  // one-in-three
  std::string variables;
  std::vector<std::string> clauses;
  // random
  bg::RandomSpec random;
  std::string demand_range = "1:4";
  std::string budget_range = "1:6";
  std::string density = "1/2";
  int cardinality = 0;
};

std::string GenerateDocument(const std::string& gadget,
                             const GenerateOptions& opt) {
  const auto variant = bg::ParseVariant(opt.variant);
  if (!variant) throw UsageError("--variant: expected standard or ordered");
  if (gadget == "coverage") {
    bg::CoverageInstance inst{SplitList(opt.universe), {}, opt.w};
    for (const std::string& set : opt.sets) inst.sets.push_back(SplitList(set));
    return bg::SerializeInstance(bg::GenerateMaxCoverage(inst, *variant));
  }
  if (gadget == "x3c-ne") {
    bg::X3CInstance inst{SplitList(opt.universe), {}};
    for (const std::string& set : opt.sets) {
      const auto items = SplitList(set);
      if (items.size() != 3) {
        throw UsageError("--triple: expected three elements, got '" + set +
                         "'");
      }
      inst.triples.push_back({items[0], items[1], items[2]});
    }
    std::optional<bg::GadgetCalibration> calibration;
    if (opt.gamma.empty() != opt.delta.empty()) {
      throw UsageError("--gamma and --delta must be given together");
    }
    if (!opt.gamma.empty()) {
      calibration =
          bg::GadgetCalibration{ParseRationalFlag(opt.gamma, "--gamma"),
                                ParseRationalFlag(opt.delta, "--delta"),
                                {},
                                {}};
    }
    const auto wiring = opt.wiring == "shared" ? bg::SetResourceWiring::kShared
                                               : bg::SetResourceWiring::kPerSet;
    const bg::NeGadget gadget_game =
        bg::GenerateNeGadget(inst, calibration, wiring);
    std::cerr << "calibration: gamma " << Show(gadget_game.calibration.gamma)
              << ", delta " << Show(gadget_game.calibration.delta) << ", alpha "
              << Show(gadget_game.calibration.alpha) << ", beta "
              << Show(gadget_game.calibration.beta) << "\n";
    return bg::SerializeInstance(gadget_game.game);
  }
  if (gadget == "std-poa") {
    return bg::SerializeInstance(bg::GenerateStandardPoAFamily(
        opt.n, ParseRationalFlag(opt.eps, "--eps")));
  }
  if (gadget == "ord-poa") {
    const bg::BudgetGame game = bg::GenerateOrderedPoAFamily(
        ParseRationalFlag(opt.eps, "--eps"), ParseRationalFlag(opt.b, "--b"),
        opt.copies);
    const bg::GameState state = bg::DefaultState(game);
    return bg::SerializeInstance(game, &state);
  }
  if (gadget == "one-in-three") {
    bg::MonotoneFormula formula{SplitList(opt.variables), {}};
    std::map<std::string, int> index;
    for (size_t i = 0; i < formula.variables.size(); ++i) {
      index[formula.variables[i]] = static_cast<int>(i);
    }
    for (const std::string& clause : opt.clauses) {
      const auto items = SplitList(clause);
      if (items.size() != 3) {
        throw UsageError("--clause: expected three variables, got '" + clause +
                         "'");
      }
      std::array<int, 3> c{};
      for (int k = 0; k < 3; ++k) {
        const auto it = index.find(items[k]);
        if (it == index.end()) {
          throw UsageError("--clause: unknown variable '" + items[k] + "'");
        }
        c[k] = it->second;
      }
      formula.clauses.push_back(c);
    }
    return bg::SerializeInstance(bg::GenerateOneInThree(formula));
  }
  if (gadget == "expo") {
    const bg::ExponentialFamily family = bg::GenerateExponentialFamily(opt.n);
    return bg::SerializeInstance(family.game, &family.initial);
  }
  // random
  bg::RandomSpec spec = opt.random;
  spec.variant = *variant;
  spec.demand_range = ParseRange(opt.demand_range, "--demand");
  spec.budget_range = ParseRange(opt.budget_range, "--budget");
  spec.density = ParseRationalFlag(opt.density, "--density");
  if (opt.cardinality > 0) spec.cardinality = opt.cardinality;
  const bg::RandomInstance inst = bg::GenerateRandom(spec);
  return bg::SerializeInstance(inst.game, nullptr,
                               inst.matroid ? &*inst.matroid : nullptr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of standard and ordered budget games."};
  app.name("budgetgame");
  app.require_subcommand(1);

  CommonOptions common;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", common.file, "Instance file, '-' for stdin");
    cmd->add_flag("--json", common.json, "Machine-readable output");
  };
  const std::map<std::string, bg::TieBreak> tie_breaks{
      {"fix", bg::TieBreak::kFixed}, {"max", bg::TieBreak::kMaxUtility}};
  const std::map<std::string, bg::Scheduler> schedulers{
      {"round_robin", bg::Scheduler::kRoundRobin},
      {"lowest_id", bg::Scheduler::kLowestIdImprover},
      {"simultaneous", bg::Scheduler::kSimultaneous}};
  const std::map<std::string, bg::EquilibriumKind> kinds{
      {"nash", bg::EquilibriumKind::kNash},
      {"strong", bg::EquilibriumKind::kStrong},
      {"super_strong", bg::EquilibriumKind::kSuperStrong}};
  const std::map<std::string, bg::SearchMode> searches{
      {"profiles", bg::SearchMode::kProfiles},
      {"profiles_x_insertions", bg::SearchMode::kProfilesTimesInsertions},
      {"all_orders", bg::SearchMode::kAllOrders}};

  auto* eval = app.add_subcommand("eval", "Utilities and welfare of a state");
  add_common(eval);
  std::string state_file;
  eval->add_option("--state", state_file,
                   "State file (default: initial state)");

  auto* dynamics = app.add_subcommand("dynamics", "Run improvement dynamics");
  add_common(dynamics);
  bg::Scheduler scheduler = bg::Scheduler::kLowestIdImprover;
  bg::TieBreak rule = bg::TieBreak::kFixed;
  int max_steps = 100000;
  std::string trace_file;
  dynamics->add_option("--scheduler", scheduler, "Who moves next")
      ->transform(CLI::CheckedTransformer(schedulers, CLI::ignore_case));
  dynamics->add_option("--tie-break", rule, "Order of simultaneous movers")
      ->transform(CLI::CheckedTransformer(tie_breaks, CLI::ignore_case));
  dynamics->add_option("--max-steps", max_steps, "Step cap")
      ->check(CLI::Range(0LL, 1LL << 40));
  dynamics->add_option("--trace", trace_file, "Write the trace here");

  auto* equilibria = app.add_subcommand("equilibria", "Enumerate equilibria");
  add_common(equilibria);
  bg::EquilibriumKind kind = bg::EquilibriumKind::kNash;
  bg::SearchMode search = bg::SearchMode::kProfiles;
  equilibria->add_option("--kind", kind, "Equilibrium concept")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  equilibria->add_option("--search", search, "State space to search")
      ->transform(CLI::CheckedTransformer(searches, CLI::ignore_case));
  equilibria->add_option("--tie-break", rule, "Order of coalition movers")
      ->transform(CLI::CheckedTransformer(tie_breaks, CLI::ignore_case));

  auto* metrics =
      app.add_subcommand("metrics", "Price of anarchy and stability");
  add_common(metrics);
  bg::SearchMode metrics_search = bg::SearchMode::kProfiles;
  metrics->add_option("--kind", kind, "Equilibrium concept")
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  auto* metrics_search_opt =
      metrics->add_option("--search", metrics_search, "State space to search")
          ->transform(CLI::CheckedTransformer(searches, CLI::ignore_case));
  metrics->add_option("--tie-break", rule, "Order of coalition movers")
      ->transform(CLI::CheckedTransformer(tie_breaks, CLI::ignore_case));

  auto* optimize = app.add_subcommand("optimize", "Optimal and greedy welfare");
  add_common(optimize);
  bool greedy = false;
  std::string matroid_text;
  optimize->add_flag("--greedy", greedy, "Also run the greedy algorithm");
  optimize->add_option("--matroid", matroid_text,
                       "Per-player cardinalities: K or PLAYER=K,...");

  auto* generate = app.add_subcommand("generate", "Write a gadget instance");
  generate->require_subcommand(1);
  GenerateOptions gen;
  generate->add_option("-o,--output", gen.output,
                       "Output file, '-' for stdout");
  auto* coverage = generate->add_subcommand("coverage", "Maximum coverage");
  coverage->add_option("--universe", gen.universe, "Elements a,b,...")
      ->required();
  coverage->add_option("--set", gen.sets, "A set a,b (repeatable)")->required();
  coverage->add_option("--w", gen.w, "Number of players")
      ->check(CLI::Range(1, 1 << 20));
  coverage->add_option("--variant", gen.variant, "standard or ordered");
  auto* x3c = generate->add_subcommand("x3c-ne", "Nash existence gadget");
  x3c->add_option("--universe", gen.universe, "Elements a,b,...")->required();
  x3c->add_option("--triple", gen.sets, "A triple a,b,c (repeatable)")
      ->required();
  x3c->add_option("--gamma", gen.gamma, "Calibration gamma");
  x3c->add_option("--delta", gen.delta, "Calibration delta");
  x3c->add_option("--wiring", gen.wiring, "per_set or shared")
      ->check(CLI::IsMember({"per_set", "shared"}));
  auto* std_poa = generate->add_subcommand("std-poa", "Standard PoA family");
  std_poa->add_option("--n", gen.n, "Number of switching players")
      ->check(CLI::Range(1, 1 << 20));
  std_poa->add_option("--eps", gen.eps, "Epsilon");
  auto* ord_poa = generate->add_subcommand("ord-poa", "Ordered PoA family");
  ord_poa->add_option("--eps", gen.eps, "Epsilon");
  ord_poa->add_option("--b", gen.b, "Budget scale");
  ord_poa->add_option("--copies", gen.copies, "Disjoint copies")
      ->check(CLI::Range(1, 1 << 20));
  auto* one_in_three =
      generate->add_subcommand("one-in-three", "Super-strong hardness gadget");
  one_in_three->add_option("--variables", gen.variables, "Variables x1,x2,...")
      ->required();
  one_in_three->add_option("--clause", gen.clauses,
                           "A clause x1,x2,x3 (repeatable)");
  auto* expo = generate->add_subcommand("expo", "Exponential dynamics family");
  expo->add_option("--n", gen.n, "Counter bits")->check(CLI::Range(1, 1 << 20));
  auto* random = generate->add_subcommand("random", "Seeded random instance");
  random->add_option("--seed", gen.random.seed, "Seed");
  random->add_option("--players", gen.random.n_players, "Players");
  random->add_option("--resources", gen.random.n_resources, "Resources");
  random->add_option("--tasks", gen.random.tasks_per_player,
                     "Tasks per player");
  random->add_option("--strategies", gen.random.strategies_per_player,
                     "Strategies per player");
  random->add_option("--demand", gen.demand_range, "Demand range LOW:HIGH");
  random->add_option("--budget", gen.budget_range, "Budget range LOW:HIGH");
  random->add_option("--density", gen.density, "Connection probability");
  random->add_option("--grid", gen.random.grid, "Value grid resolution");
  random->add_option("--cardinality", gen.cardinality,
                     "Strategies are all K-subsets of the tasks");
  gen.variant = "standard";
  random->add_option("--variant", gen.variant, "standard or ordered")
      ->default_str("ordered");
  for (CLI::App* sub : generate->get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsageError;
  }

  try {
    if (eval->parsed()) {
      RunEval(common, state_file);
    } else if (dynamics->parsed()) {
      RunDynamicsCommand(common, scheduler, rule, max_steps, trace_file);
    } else if (equilibria->parsed()) {
      RunEquilibria(common, kind, search, rule);
    } else if (metrics->parsed()) {
      RunMetrics(common, kind,
                 metrics_search_opt->count() > 0
                     ? std::optional<bg::SearchMode>(metrics_search)
                     : std::nullopt,
                 rule);
    } else if (optimize->parsed()) {
      RunOptimize(common, greedy, matroid_text);
    } else if (generate->parsed()) {
      std::string gadget;
      for (CLI::App* sub : generate->get_subcommands())
        gadget = sub->get_name();
      if (gadget == "random" && random->count("--variant") == 0) {
        gen.variant = "ordered";
      }
      WriteText(gen.output, GenerateDocument(gadget, gen));
    }
  } catch (const UsageError& e) {
    std::cerr << "budgetgame: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const bg::Error& e) {
    std::cerr << "budgetgame: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::domain_error& e) {
    std::cerr << "budgetgame: " << e.what() << "\n";
    return kExitDomainError;
  }
  return 0;
}
