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

#include "budget_games/instance_io.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "budget_games/errors.h"
#include "budget_games/utility.h"

namespace budget_games {
namespace {

using Json = nlohmann::ordered_json;

std::string PointerToken(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string Child(const std::string& path, std::string_view key) {
  return path + "/" + PointerToken(key);
}

std::string Child(const std::string& path, size_t index) {
  return path + "/" + std::to_string(index);
}

// Parses JSON text, rejecting duplicate object keys.
Json ParseJson(std::string_view text, const std::string& source) {
  const std::string where = source.empty() ? "<input>" : source;
  std::vector<std::set<std::string>> keys;
  Json::parser_callback_t callback = [&](int, Json::parse_event_t event,
                                         Json& parsed) {
    switch (event) {
      case Json::parse_event_t::object_start:
        keys.emplace_back();
        break;
      case Json::parse_event_t::object_end:
        keys.pop_back();
        break;
      case Json::parse_event_t::key: {
        const std::string key = parsed.get<std::string>();
        if (!keys.back().insert(key).second) {
          throw ParseError(where + ": duplicate field '" + key + "'");
        }
        break;
      }
      default:
        break;
    }
    return true;
  };
  try {
    return Json::parse(text.begin(), text.end(), callback);
  } catch (const Json::parse_error& e) {
    int line = 1;
    int column = 1;
    const size_t end =
        std::min<size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = e.what();
    const size_t at = detail.find("column ");
    const size_t colon = detail.find(": ", at == std::string::npos ? 0 : at);
    if (colon != std::string::npos) detail = detail.substr(colon + 2);
    throw ParseError(where + ":" + std::to_string(line) + ":" +
                         std::to_string(column) + ": syntax error: " + detail,
                     "", line, column);
  }
}

// Typed access to a parsed document with JSON-pointer error locations.
class Reader {
 public:
  explicit Reader(const std::string& source)
      : where_(source.empty() ? "<input>" : source) {}

  [[noreturn]] void Fail(const std::string& path,
                         const std::string& message) const {
    throw ParseError(
        where_ + ": " + (path.empty() ? "/" : path) + ": " + message,
        path.empty() ? "/" : path);
  }

  void ExpectObject(const Json& j, const std::string& path,
                    std::initializer_list<std::string_view> allowed) const {
    if (!j.is_object()) Fail(path, "expected an object");
    for (const auto& [key, value] : j.items()) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        Fail(Child(path, key), "unknown field '" + key + "'");
      }
    }
  }

  // An object with arbitrary keys (ids).
  void ExpectMap(const Json& j, const std::string& path) const {
    if (!j.is_object()) Fail(path, "expected an object");
  }

  const Json& Field(const Json& j, const std::string& path,
                    const std::string& key) const {
    const auto it = j.find(key);
    if (it == j.end()) Fail(path, "missing field '" + key + "'");
    return *it;
  }

  const Json& Array(const Json& j, const std::string& path) const {
    if (!j.is_array()) Fail(path, "expected an array");
    return j;
  }

  std::string String(const Json& j, const std::string& path) const {
    if (!j.is_string()) Fail(path, "expected a string");
    return j.get<std::string>();
  }

  int Int(const Json& j, const std::string& path) const {
    if (!j.is_number_integer()) Fail(path, "expected an integer");
    if (j.is_number_unsigned()) {
      const auto v = j.get<std::uint64_t>();
      if (v > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
        Fail(path, "integer out of range");
      }
      return static_cast<int>(v);
    }
    const auto v = j.get<std::int64_t>();
    if (v < std::numeric_limits<int>::min() ||
        v > std::numeric_limits<int>::max()) {
      Fail(path, "integer out of range");
    }
    return static_cast<int>(v);
  }

  Rational NonNegative(const Json& j, const std::string& path) const {
    if (!j.is_string())
      Fail(path, "expected a rational string such as \"8/3\"");
    Rational value;
    try {
      value = Rational::Parse(j.get<std::string>());
    } catch (const ParseError& e) {
      Fail(path, e.what());
    }
    if (value.Sign() < 0) Fail(path, "must not be negative");
    return value;
  }

 private:
  std::string where_;
};

GameState ReadState(const BudgetGame& game, const Json& j,
                    const std::string& path, const Reader& in) {
  in.ExpectObject(j, path, {"profile", "order"});
  const std::string profile_path = Child(path, "profile");
  const Json& profile_json = in.Field(j, path, "profile");
  in.ExpectMap(profile_json, profile_path);
  StrategyProfile profile(game.num_players(), -1);
  for (const auto& [player_id, choice] : profile_json.items()) {
    const std::string p_path = Child(profile_path, player_id);
    PlayerIndex p;
    try {
      p = game.PlayerByName(player_id);
    } catch (const ModelError&) {
      in.Fail(p_path, "unknown player '" + player_id + "'");
    }
    const int s = in.Int(choice, p_path);
    if (s < 0 || s >= static_cast<int>(game.player(p).strategies.size())) {
      in.Fail(p_path, "strategy index " + std::to_string(s) +
                          " out of range for player '" + player_id + "'");
    }
    profile[p] = s;
  }
  for (PlayerIndex p = 0; p < game.num_players(); ++p) {
    if (profile[p] < 0) {
      in.Fail(profile_path, "missing player '" + game.player(p).id + "'");
    }
  }

  const auto order_it = j.find("order");
  if (order_it == j.end()) return MakeState(game, std::move(profile));
  const std::string order_path = Child(path, "order");
  if (game.variant() != Variant::kOrdered) {
    in.Fail(order_path, "task orders are only allowed in ordered games");
  }
  in.ExpectMap(*order_it, order_path);
  GameState state;
  state.profile = std::move(profile);
  state.order.assign(game.num_resources(), {});
  std::vector<bool> seen_resource(game.num_resources(), false);
  for (const auto& [resource_id, sequence] : order_it->items()) {
    const std::string r_path = Child(order_path, resource_id);
    ResourceIndex r;
    try {
      r = game.ResourceByName(resource_id);
    } catch (const ModelError&) {
      in.Fail(r_path, "unknown resource '" + resource_id + "'");
    }
    seen_resource[r] = true;
    in.Array(sequence, r_path);
    std::vector<bool> seen_task(game.num_tasks(), false);
    for (size_t k = 0; k < sequence.size(); ++k) {
      const std::string t_path = Child(r_path, k);
      const std::string task_id = in.String(sequence[k], t_path);
      TaskIndex t;
      try {
        t = game.TaskByName(task_id);
      } catch (const ModelError&) {
        in.Fail(t_path, "unknown task '" + task_id + "'");
      }
      if (seen_task[t]) in.Fail(t_path, "task '" + task_id + "' repeated");
      seen_task[t] = true;
      state.order[r].push_back(t);
    }
    if (static_cast<int>(sequence.size()) != game.num_tasks()) {
      in.Fail(r_path, "order must list all " +
                          std::to_string(game.num_tasks()) + " tasks");
    }
  }
  for (ResourceIndex r = 0; r < game.num_resources(); ++r) {
    if (!seen_resource[r]) {
      in.Fail(order_path, "missing resource '" + game.resource(r).id + "'");
    }
  }
  return state;
}

BudgetGame ReadGame(const Json& doc, const Reader& in) {
  const Json& version = in.Field(doc, "", "format_version");
  if (in.Int(version, "/format_version") != kFormatVersion) {
    in.Fail("/format_version", "unsupported version (expected " +
                                   std::to_string(kFormatVersion) + ")");
  }
  const std::string variant_name =
      in.String(in.Field(doc, "", "variant"), "/variant");
  const auto variant = ParseVariant(variant_name);
  if (!variant) {
    in.Fail("/variant", "unknown variant '" + variant_name +
                            "' (expected standard or ordered)");
  }
  BudgetGame::Builder builder(*variant);

  const Json& resources =
      in.Array(in.Field(doc, "", "resources"), "/resources");
  std::map<std::string, ResourceIndex> resource_ids;
  for (size_t i = 0; i < resources.size(); ++i) {
    const std::string path = Child("/resources", i);
    in.ExpectObject(resources[i], path, {"id", "budget"});
    const std::string id =
        in.String(in.Field(resources[i], path, "id"), Child(path, "id"));
    const Rational budget = in.NonNegative(
        in.Field(resources[i], path, "budget"), Child(path, "budget"));
    if (resource_ids.count(id)) {
      in.Fail(Child(path, "id"), "duplicate resource id '" + id + "'");
    }
    resource_ids[id] = builder.AddResource(id, budget);
  }

  const Json& players = in.Array(in.Field(doc, "", "players"), "/players");
  std::set<std::string> player_ids;
  std::set<std::string> task_ids;
  std::map<int, std::string> priorities;
  for (size_t i = 0; i < players.size(); ++i) {
    const std::string path = Child("/players", i);
    const Json& pj = players[i];
    in.ExpectObject(pj, path, {"id", "priority", "tasks", "strategies"});
    const std::string id =
        in.String(in.Field(pj, path, "id"), Child(path, "id"));
    if (!player_ids.insert(id).second) {
      in.Fail(Child(path, "id"), "duplicate player id '" + id + "'");
    }
    const int priority =
        in.Int(in.Field(pj, path, "priority"), Child(path, "priority"));
    if (const auto it = priorities.find(priority); it != priorities.end()) {
      in.Fail(Child(path, "priority"), "priority " + std::to_string(priority) +
                                           " already used by player '" +
                                           it->second + "'");
    }
    priorities[priority] = id;
    const PlayerIndex p = builder.AddPlayer(id, priority);

    const std::string tasks_path = Child(path, "tasks");
    const Json& tasks = in.Array(in.Field(pj, path, "tasks"), tasks_path);
    std::map<std::string, TaskIndex> own_tasks;
    for (size_t k = 0; k < tasks.size(); ++k) {
      const std::string t_path = Child(tasks_path, k);
      in.ExpectObject(tasks[k], t_path, {"id", "demands"});
      const std::string task_id =
          in.String(in.Field(tasks[k], t_path, "id"), Child(t_path, "id"));
      if (!task_ids.insert(task_id).second) {
        in.Fail(Child(t_path, "id"), "duplicate task id '" + task_id + "'");
      }
      const std::string d_path = Child(t_path, "demands");
      const Json& demands_json = in.Field(tasks[k], t_path, "demands");
      in.ExpectMap(demands_json, d_path);
      std::vector<Demand> demands;
      for (const auto& [resource_id, amount] : demands_json.items()) {
        const std::string a_path = Child(d_path, resource_id);
        const auto r = resource_ids.find(resource_id);
        if (r == resource_ids.end()) {
          in.Fail(a_path, "unknown resource '" + resource_id + "'");
        }
        demands.push_back({r->second, in.NonNegative(amount, a_path)});
      }
      own_tasks[task_id] = builder.AddTask(p, task_id, std::move(demands));
    }

    const std::string s_path = Child(path, "strategies");
    const Json& strategies = in.Array(in.Field(pj, path, "strategies"), s_path);
    if (strategies.empty()) in.Fail(s_path, "a player needs a strategy");
    for (size_t k = 0; k < strategies.size(); ++k) {
      const std::string k_path = Child(s_path, k);
      const Json& members = in.Array(strategies[k], k_path);
      std::vector<TaskIndex> chosen;
      for (size_t m = 0; m < members.size(); ++m) {
        const std::string m_path = Child(k_path, m);
        const std::string task_id = in.String(members[m], m_path);
        const auto t = own_tasks.find(task_id);
        if (t == own_tasks.end()) {
          in.Fail(m_path,
                  "'" + task_id + "' is not a task of player '" + id + "'");
        }
        if (std::find(chosen.begin(), chosen.end(), t->second) !=
            chosen.end()) {
          in.Fail(m_path, "task '" + task_id + "' repeated");
        }
        chosen.push_back(t->second);
      }
      try {
        builder.AddStrategy(p, std::move(chosen));
      } catch (const ModelError& e) {
        in.Fail(k_path, e.what());
      }
    }
  }
  try {
    return std::move(builder).Build();
  } catch (const ModelError& e) {
    in.Fail("", e.what());
  }
}

MatroidSpec ReadMatroid(const BudgetGame& game, const Json& j,
                        const Reader& in) {
  const std::string path = "/matroid";
  in.ExpectObject(j, path, {"kind", "limits"});
  const std::string kind = in.String(in.Field(j, path, "kind"), path + "/kind");
  if (kind != "per_player_cardinality") {
    in.Fail(path + "/kind", "unknown matroid kind '" + kind +
                                "' (expected per_player_cardinality)");
  }
  const std::string l_path = path + "/limits";
  const Json& limits = in.Field(j, path, "limits");
  in.ExpectMap(limits, l_path);
  MatroidSpec spec{std::vector<int>(game.num_players(), -1)};
  for (const auto& [player_id, k] : limits.items()) {
    PlayerIndex p;
    try {
      p = game.PlayerByName(player_id);
    } catch (const ModelError&) {
      in.Fail(Child(l_path, player_id), "unknown player '" + player_id + "'");
    }
    spec.limits[p] = in.Int(k, Child(l_path, player_id));
  }
  for (PlayerIndex p = 0; p < game.num_players(); ++p) {
    if (spec.limits[p] < 0) {
      in.Fail(l_path, "missing player '" + game.player(p).id + "'");
    }
  }
  try {
    ValidateMatroidSpec(game, spec);
  } catch (const ModelError& e) {
    in.Fail(path, e.what());
  }
  return spec;
}

Json UtilityMap(const BudgetGame& game, const std::vector<PlayerIndex>& order,
                const std::vector<Rational>& utilities) {
  std::vector<const Rational*> by_player(game.num_players(), nullptr);
  for (size_t k = 0; k < order.size(); ++k) by_player[order[k]] = &utilities[k];
  Json out = Json::object();
  for (PlayerIndex p = 0; p < game.num_players(); ++p) {
    out[game.player(p).id] = RationalToJson(*by_player[p]);
  }
  return out;
}

}  // namespace

InstanceDocument ParseInstance(std::string_view text,
                               const std::string& source) {
  const Json doc = ParseJson(text, source);
  const Reader in(source);
  in.ExpectObject(doc, "",
                  {"format_version", "variant", "resources", "players",
                   "initial_state", "matroid"});
  InstanceDocument result{ReadGame(doc, in), std::nullopt, std::nullopt};
  if (const auto it = doc.find("initial_state"); it != doc.end()) {
    result.initial_state = ReadState(result.game, *it, "/initial_state", in);
  }
  if (const auto it = doc.find("matroid"); it != doc.end()) {
    result.matroid = ReadMatroid(result.game, *it, in);
  }
  return result;
}

std::string SerializeInstance(const BudgetGame& game, const GameState* state,
                              const MatroidSpec* matroid) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["variant"] = std::string(VariantName(game.variant()));
  Json resources = Json::array();
  for (const Resource& r : game.resources()) {
    resources.push_back({{"id", r.id}, {"budget", r.budget.ToString()}});
  }
  doc["resources"] = std::move(resources);
  Json players = Json::array();
  for (const Player& player : game.players()) {
    Json tasks = Json::array();
    for (TaskIndex t : player.tasks) {
      Json demands = Json::object();
      for (const Demand& d : game.task(t).demands) {
        demands[game.resource(d.resource).id] = d.amount.ToString();
      }
      tasks.push_back(
          {{"id", game.task(t).id}, {"demands", std::move(demands)}});
    }
    Json strategies = Json::array();
    for (const Strategy& s : player.strategies) {
      Json members = Json::array();
      for (TaskIndex t : s) members.push_back(game.task(t).id);
      strategies.push_back(std::move(members));
    }
    players.push_back({{"id", player.id},
                       {"priority", player.priority},
                       {"tasks", std::move(tasks)},
                       {"strategies", std::move(strategies)}});
  }
  doc["players"] = std::move(players);
  if (state != nullptr) doc["initial_state"] = StateToJson(game, *state);
  if (matroid != nullptr) {
    Json limits = Json::object();
    for (PlayerIndex p = 0; p < game.num_players(); ++p) {
      limits[game.player(p).id] = matroid->limits.at(p);
    }
    doc["matroid"] = {{"kind", "per_player_cardinality"},
                      {"limits", std::move(limits)}};
  }
  return doc.dump(2) + "\n";
}

GameState ParseState(const BudgetGame& game, std::string_view text,
                     const std::string& source) {
  const Json doc = ParseJson(text, source);
  const Reader in(source);
  return ReadState(game, doc, "", in);
}

Json StateToJson(const BudgetGame& game, const GameState& state) {
  ValidateState(game, state);
  Json profile = Json::object();
  for (PlayerIndex p = 0; p < game.num_players(); ++p) {
    profile[game.player(p).id] = state.profile[p];
  }
  Json out = {{"profile", std::move(profile)}};
  if (game.variant() == Variant::kOrdered) {
    Json order = Json::object();
    for (ResourceIndex r = 0; r < game.num_resources(); ++r) {
      Json sequence = Json::array();
      for (TaskIndex t : state.order[r]) sequence.push_back(game.task(t).id);
      order[game.resource(r).id] = std::move(sequence);
    }
    out["order"] = std::move(order);
  }
  return out;
}

std::string ReadTextFile(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

Json RationalToJson(const Rational& value) {
  return {{"value", value.ToString()}, {"approx", value.ToDouble()}};
}

Json TraceToJson(const BudgetGame& game, const DynamicsTrace& trace,
                 Scheduler scheduler) {
  Json out;
  out["variant"] = std::string(VariantName(trace.variant));
  out["scheduler"] = std::string(SchedulerName(scheduler));
  out["tie_break"] = std::string(TieBreakName(trace.rule));
  Rational initial_welfare;
  for (const Rational& u : trace.initial_utilities) initial_welfare += u;
  out["initial"] = {{"welfare", RationalToJson(initial_welfare)},
                    {"utilities", UtilityMap(game, trace.initial_priority_order,
                                             trace.initial_utilities)}};
  Json steps = Json::array();
  for (size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& step = trace.steps[k];
    Json movers = Json::array();
    for (const Move& move : step.deviation.moves) {
      Json tasks = Json::array();
      for (TaskIndex t : game.player(move.player).strategies[move.strategy]) {
        tasks.push_back(game.task(t).id);
      }
      movers.push_back({{"player", game.player(move.player).id},
                        {"strategy", move.strategy},
                        {"tasks", std::move(tasks)}});
    }
    steps.push_back(
        {{"step", k + 1},
         {"movers", std::move(movers)},
         {"welfare_before", RationalToJson(step.welfare_before)},
         {"welfare_after", RationalToJson(step.welfare_after)},
         {"utilities", UtilityMap(game, step.priority_order, step.utilities)}});
  }
  out["steps"] = std::move(steps);
  out["terminal"] =
      trace.terminal == Terminal::kConverged ? "converged" : "step_cap_reached";
  out["step_count"] = trace.steps.size();
  out["final_state"] = StateToJson(game, trace.final_state);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Uniform integer in [0, n) by rejection, independent of the standard
// library's distribution implementations.
std::uint64_t Below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;
  while (true) {
    const std::uint64_t x = rng();
    if (x <= limit) return x % n;
  }
}

Rational GridValue(std::mt19937_64& rng,
                   const std::pair<Rational, Rational>& range, int grid) {
  const auto k = static_cast<std::int64_t>(Below(rng, grid + 1));
  return range.first + (range.second - range.first) * Rational(k, grid);
}

void ValidateRange(const std::pair<Rational, Rational>& range,
                   const std::string& name) {
  if (range.first.Sign() < 0 || range.second < range.first) {
    throw ModelError(name + " must satisfy 0 <= low <= high");
  }
}

}  // namespace

RandomInstance GenerateRandom(const RandomSpec& spec) {
  if (spec.n_players < 1) throw ModelError("n_players must be at least 1");
  if (spec.n_resources < 0) throw ModelError("n_resources must be >= 0");
  if (spec.tasks_per_player < 1 || spec.tasks_per_player > 20) {
    throw ModelError("tasks_per_player must be between 1 and 20");
  }
  if (spec.grid < 1) throw ModelError("grid must be at least 1");
  ValidateRange(spec.demand_range, "demand_range");
  ValidateRange(spec.budget_range, "budget_range");
  if (spec.density.Sign() < 0 || spec.density > Rational(1)) {
    throw ModelError("density must lie in [0, 1]");
  }
  const int k = spec.cardinality.value_or(0);
  if (spec.cardinality && (k < 1 || k > spec.tasks_per_player)) {
    throw ModelError("cardinality must lie in [1, tasks_per_player]");
  }
  const std::uint64_t subsets = (1ULL << spec.tasks_per_player) - 1;
  if (!spec.cardinality &&
      (spec.strategies_per_player < 1 ||
       static_cast<std::uint64_t>(spec.strategies_per_player) > subsets)) {
    throw ModelError("strategies_per_player must lie in [1, " +
                     std::to_string(subsets) + "]");
  }

  std::mt19937_64 rng(spec.seed);
  BudgetGame::Builder builder(spec.variant);
  for (int r = 0; r < spec.n_resources; ++r) {
    builder.AddResource("r" + std::to_string(r + 1),
                        GridValue(rng, spec.budget_range, spec.grid));
  }
  std::vector<int> priorities(spec.n_players);
  for (int i = 0; i < spec.n_players; ++i) priorities[i] = i + 1;
  for (int i = spec.n_players - 1; i > 0; --i) {
    std::swap(priorities[i], priorities[Below(rng, i + 1)]);
  }
  constexpr std::int64_t kDensityScale = std::int64_t{1} << 32;
  for (int i = 0; i < spec.n_players; ++i) {
    const std::string id = "p" + std::to_string(i + 1);
    const PlayerIndex p = builder.AddPlayer(id, priorities[i]);
    std::vector<TaskIndex> tasks;
    for (int t = 0; t < spec.tasks_per_player; ++t) {
      std::vector<Demand> demands;
      for (int r = 0; r < spec.n_resources; ++r) {
        const Rational coin(
            static_cast<std::int64_t>(Below(rng, kDensityScale)),
            kDensityScale);
        if (coin < spec.density) {
          demands.push_back({r, GridValue(rng, spec.demand_range, spec.grid)});
        }
      }
      tasks.push_back(builder.AddTask(p, id + "_t" + std::to_string(t + 1),
                                      std::move(demands)));
    }
    if (spec.cardinality) {
      // All k-subsets in lexicographic order.
      std::vector<int> pick(k);
      for (int j = 0; j < k; ++j) pick[j] = j;
      while (true) {
        std::vector<TaskIndex> chosen;
        for (int j : pick) chosen.push_back(tasks[j]);
        builder.AddStrategy(p, std::move(chosen));
        int j = k - 1;
        while (j >= 0 && pick[j] == spec.tasks_per_player - k + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int l = j + 1; l < k; ++l) pick[l] = pick[l - 1] + 1;
      }
    } else {
      std::set<std::uint64_t> used;
      while (static_cast<int>(used.size()) < spec.strategies_per_player) {
        const std::uint64_t mask = 1 + Below(rng, subsets);
        if (!used.insert(mask).second) continue;
        std::vector<TaskIndex> chosen;
        for (int t = 0; t < spec.tasks_per_player; ++t) {
          if (mask & (1ULL << t)) chosen.push_back(tasks[t]);
        }
        builder.AddStrategy(p, std::move(chosen));
      }
    }
  }
  RandomInstance result{std::move(builder).Build(), std::nullopt};
  if (spec.cardinality) {
    result.matroid = MatroidSpec{std::vector<int>(spec.n_players, k)};
  }
  return result;
}

}  // namespace budget_games
