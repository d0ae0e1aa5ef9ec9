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

#include "budget_games/generators.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <utility>

#include "budget_games/dynamics.h"
#include "budget_games/equilibria.h"
#include "budget_games/optimize.h"
#include "budget_games/utility.h"

namespace budget_games {
namespace {

// Brute-force behavioural checks of the Nash gadget are skipped above this
// many non-D players.
constexpr int kMaxGadgetCheckPlayers = 16;

std::map<std::string, int> IndexUniverse(
    const std::vector<std::string>& universe) {
  std::map<std::string, int> index;
  for (const std::string& e : universe) {
    if (!index.emplace(e, static_cast<int>(index.size())).second) {
      throw ModelError("universe repeats element '" + e + "'");
    }
  }
  return index;
}

}  // namespace

// ---------------------------------------------------------------------------

BudgetGame GenerateMaxCoverage(const CoverageInstance& instance,
                               Variant variant) {
  if (instance.w < 1) throw ModelError("coverage instance needs w >= 1");
  if (instance.sets.empty()) throw ModelError("coverage instance has no sets");
  const auto index = IndexUniverse(instance.universe);
  for (const auto& set : instance.sets) {
    for (const std::string& e : set) {
      if (!index.count(e)) {
        throw ModelError("set element '" + e + "' is not in the universe");
      }
    }
  }

  BudgetGame::Builder builder(variant);
  for (const std::string& e : instance.universe) {
    builder.AddResource("r_" + e, Rational(1));
  }
  for (int i = 0; i < instance.w; ++i) {
    const std::string pid = "p" + std::to_string(i + 1);
    const PlayerIndex p = builder.AddPlayer(pid, instance.w - i);
    for (size_t k = 0; k < instance.sets.size(); ++k) {
      std::vector<Demand> demands;
      std::set<int> seen;
      for (const std::string& e : instance.sets[k]) {
        if (seen.insert(index.at(e)).second) {
          demands.push_back({index.at(e), Rational(1)});
        }
      }
      const TaskIndex t = builder.AddTask(p, pid + "_W" + std::to_string(k + 1),
                                          std::move(demands));
      builder.AddStrategy(p, {t});
    }
  }
  return std::move(builder).Build();
}

int MaxCoverage(const CoverageInstance& instance) {
  const auto index = IndexUniverse(instance.universe);
  const int q = static_cast<int>(instance.sets.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << q); ++mask) {
    if (std::popcount(mask) > instance.w) continue;
    std::set<int> covered;
    for (int k = 0; k < q; ++k) {
      if (!(mask & (1u << k))) continue;
      for (const std::string& e : instance.sets[k]) covered.insert(index.at(e));
    }
    best = std::max(best, static_cast<int>(covered.size()));
  }
  return best;
}

// ---------------------------------------------------------------------------

bool ExactCoverExists(const X3CInstance& instance) {
  const auto index = IndexUniverse(instance.universe);
  const int n = static_cast<int>(instance.universe.size());
  std::vector<unsigned long long> masks;
  for (const auto& triple : instance.triples) {
    unsigned long long mask = 0;
    for (const std::string& e : triple) mask |= 1ULL << index.at(e);
    masks.push_back(mask);
  }
  const unsigned long long full = n == 64 ? ~0ULL : (1ULL << n) - 1;
  std::function<bool(size_t, unsigned long long)> search =
      [&](size_t k, unsigned long long covered) {
        if (covered == full) return true;
        if (k == masks.size()) return false;
        if ((masks[k] & covered) == 0 && search(k + 1, covered | masks[k])) {
          return true;
        }
        return search(k + 1, covered);
      };
  return search(0, 0);
}

namespace {

struct NeGadgetLayout {
  int q = 0;
  int m = 0;
  std::vector<PlayerIndex> set_players;
  PlayerIndex a = -1, b = -1, c = -1, d = -1;
};

BudgetGame BuildNeGadget(const X3CInstance& instance,
                         const GadgetCalibration& calibration,
                         SetResourceWiring wiring, NeGadgetLayout& layout) {
  const auto index = IndexUniverse(instance.universe);
  if (instance.universe.size() % 3 != 0) {
    throw ModelError("X3C universe size must be a multiple of 3");
  }
  for (const auto& triple : instance.triples) {
    std::set<std::string> distinct(triple.begin(), triple.end());
    if (distinct.size() != 3) throw ModelError("X3C triple repeats an element");
    for (const std::string& e : triple) {
      if (!index.count(e)) {
        throw ModelError("triple element '" + e + "' is not in the universe");
      }
    }
  }
  const int q = static_cast<int>(instance.triples.size());
  if (q == 0) throw ModelError("X3C instance has no triples");
  layout.q = q;
  layout.m = static_cast<int>(instance.universe.size()) / 3;

  const Rational set_budget(8, 3);
  const Rational set_demand(2992, 3);  // 997 1/3
  const Rational aux_demand(100, 3);   // 33 1/3

  BudgetGame::Builder builder(Variant::kStandard);
  std::vector<ResourceIndex> element;
  for (const std::string& e : instance.universe) {
    element.push_back(builder.AddResource("u_" + e, Rational(1)));
  }
  std::vector<ResourceIndex> set_resource;
  if (wiring == SetResourceWiring::kPerSet) {
    for (int i = 0; i < q; ++i) {
      set_resource.push_back(
          builder.AddResource("r_e" + std::to_string(i + 1), set_budget));
    }
  } else {
    set_resource.assign(q, builder.AddResource("r_e", set_budget * q));
  }
  const ResourceIndex r_f = builder.AddResource("r_f", Rational(100));
  const ResourceIndex r_aux = builder.AddResource("r_aux", Rational(100));
  const ResourceIndex r_aux2 =
      builder.AddResource("r_aux_prime", calibration.gamma);
  const Rational prime_budget[6] = {5, 10, 10, 5, 10, 15};
  ResourceIndex prime[6];
  for (int k = 0; k < 6; ++k) {
    prime[k] =
        builder.AddResource("r_prime" + std::to_string(k + 1), prime_budget[k]);
  }

  int priority = q + 4;
  auto add_player = [&](const std::string& id, std::vector<Demand> first,
                        std::vector<Demand> second) {
    const PlayerIndex p = builder.AddPlayer(id, priority--);
    const TaskIndex t0 = builder.AddTask(p, id + "_0", std::move(first));
    const TaskIndex t1 = builder.AddTask(p, id + "_1", std::move(second));
    builder.AddStrategy(p, {t0});
    builder.AddStrategy(p, {t1});
    return p;
  };

  for (int i = 0; i < q; ++i) {
    std::vector<Demand> cover;
    for (const std::string& e : instance.triples[i]) {
      cover.push_back({element[index.at(e)], Rational(1)});
    }
    layout.set_players.push_back(add_player("s" + std::to_string(i + 1),
                                            std::move(cover),
                                            {{set_resource[i], set_demand}}));
  }
  layout.a = add_player(
      "A",
      {{prime[0], Rational(5)}, {prime[1], Rational(10)}, {r_aux, aux_demand}},
      {{prime[2], Rational(990)}});
  layout.b = add_player(
      "B",
      {{prime[2], Rational(10)}, {prime[3], Rational(5)}, {r_aux, aux_demand}},
      {{prime[4], Rational(990)}});
  layout.c = add_player("C",
                        {{prime[1], Rational(990)},
                         {prime[4], Rational(10)},
                         {r_aux, aux_demand}},
                        {{prime[5], Rational(11)}});
  std::vector<Demand> d_second{{r_f, Rational(100)}};
  if (wiring == SetResourceWiring::kPerSet) {
    for (int i = 0; i < q; ++i)
      d_second.push_back({set_resource[i], set_budget});
  } else {
    d_second.push_back({set_resource[0], set_budget * q});
  }
  layout.d =
      add_player("D", {{r_aux, calibration.delta}, {r_aux2, calibration.gamma}},
                 std::move(d_second));
  return std::move(builder).Build();
}

// Empty string when the gadget behaves as intended, otherwise what failed.
std::string CheckNeGadgetBehaviour(const BudgetGame& game,
                                   const NeGadgetLayout& layout) {
  const int others = layout.q + 3;
  if (others > kMaxGadgetCheckPlayers) return "";
  std::vector<PlayerIndex> free_players = layout.set_players;
  free_players.insert(free_players.end(), {layout.a, layout.b, layout.c});

  for (unsigned mask = 0; mask < (1u << others); ++mask) {
    StrategyProfile profile(game.num_players(), 0);
    int outside = 0;  // set players on their second task
    for (int k = 0; k < others; ++k) {
      profile[free_players[k]] = (mask >> k) & 1u;
      if (k < layout.q && ((mask >> k) & 1u)) ++outside;
    }
    profile[layout.d] = 0;
    const Rational first =
        PlayerUtility(game, MakeState(game, profile), layout.d);
    profile[layout.d] = 1;
    const Rational second =
        PlayerUtility(game, MakeState(game, profile), layout.d);
    const bool wants_second = outside <= layout.q - layout.m;
    if (wants_second ? !(second > first) : !(first > second)) {
      return "player D does not switch exactly at " +
             std::to_string(layout.q - layout.m) +
             " set players outside the cover (" + std::to_string(outside) +
             " outside: first task " + first.ToString() + ", second task " +
             second.ToString() + ")";
    }
  }

  // A, B and C never settle while D plays its first task, and settle on
  // their first tasks while D plays its second.
  for (int d_choice = 0; d_choice < 2; ++d_choice) {
    for (unsigned mask = 0; mask < 8; ++mask) {
      StrategyProfile profile(game.num_players(), 1);
      profile[layout.d] = d_choice;
      profile[layout.a] = mask & 1u;
      profile[layout.b] = (mask >> 1) & 1u;
      profile[layout.c] = (mask >> 2) & 1u;
      const GameState state = MakeState(game, profile);
      bool someone_improves = false;
      for (PlayerIndex p : {layout.a, layout.b, layout.c}) {
        if (ImprovingResponse(game, state, p)) someone_improves = true;
      }
      if (d_choice == 0 && !someone_improves) {
        return "A, B and C have a stable profile while D plays its first task";
      }
      if (d_choice == 1 && mask == 0 && someone_improves) {
        return "A, B and C are not stable on their first tasks while D plays "
               "its second task";
      }
    }
  }
  return "";
}

}  // namespace

NeGadget GenerateNeGadget(const X3CInstance& instance,
                          std::optional<GadgetCalibration> calibration,
                          SetResourceWiring wiring) {
  const int q = static_cast<int>(instance.triples.size());
  const int m = static_cast<int>(instance.universe.size()) / 3;
  // D's share of a set resource is its whole budget b = 8/3 when the set
  // player covers, and b * b / (b + 997 1/3) = b^2 / 1000 otherwise.
  const Rational b(8, 3);
  const Rational shared = b * b / Rational(1000);
  GadgetCalibration calib;
  calib.alpha = Rational(q - m) * shared + Rational(m) * b;
  calib.beta = Rational(q - m + 1) * shared + Rational(m - 1) * b;
  if (calibration) {
    calib.gamma = calibration->gamma;
    calib.delta = calibration->delta;
  } else {
    calib.gamma = (calib.alpha + calib.beta) / Rational(2);
  }
  if (!(calib.alpha > calib.gamma && calib.gamma > calib.beta)) {
    throw CalibrationError("gamma must lie strictly between beta and alpha",
                           calib.alpha, calib.beta);
  }
  const Rational threshold = Rational(100) *
                             (calib.beta - calib.gamma + Rational(100)) /
                             (calib.gamma - calib.beta);
  if (!calibration) calib.delta = threshold.Floor() + Rational(1);
  if (!(calib.delta > threshold)) {
    throw CalibrationError("delta must exceed " + threshold.ToString(),
                           calib.alpha, calib.beta);
  }

  NeGadgetLayout layout;
  BudgetGame game = BuildNeGadget(instance, calib, wiring, layout);
  const std::string failure = CheckNeGadgetBehaviour(game, layout);
  if (!failure.empty()) {
    throw CalibrationError("gadget calibration failed: " + failure +
                               " (alpha " + calib.alpha.ToString() + ", beta " +
                               calib.beta.ToString() + ")",
                           calib.alpha, calib.beta);
  }
  return {std::move(game), calib};
}

// ---------------------------------------------------------------------------

BudgetGame GenerateStandardPoAFamily(int n, const Rational& eps) {
  if (n < 1) throw ModelError("standard PoA family needs n >= 1");
  const Rational share = Rational(1, n + 1);
  if (!(eps.Sign() > 0 && eps < share)) {
    throw ModelError("eps must satisfy 0 < eps < 1/(n+1)");
  }
  BudgetGame::Builder builder(Variant::kStandard);
  const ResourceIndex r1 = builder.AddResource("r1", Rational(1));
  const ResourceIndex r2 = builder.AddResource("r2", Rational(1));
  for (int i = 1; i <= n; ++i) {
    const std::string id = "p" + std::to_string(i);
    const PlayerIndex p = builder.AddPlayer(id, n + 2 - i);
    const TaskIndex t0 = builder.AddTask(p, id + "_0", {{r1, share - eps}});
    const TaskIndex t1 = builder.AddTask(p, id + "_1", {{r2, Rational(1)}});
    builder.AddStrategy(p, {t0});
    builder.AddStrategy(p, {t1});
  }
  const std::string id = "p" + std::to_string(n + 1);
  const PlayerIndex p = builder.AddPlayer(id, 1);
  builder.AddStrategy(p, {builder.AddTask(p, id, {{r2, Rational(1)}})});
  return std::move(builder).Build();
}

BudgetGame GenerateOrderedPoAFamily(const Rational& eps, const Rational& b,
                                    int copies) {
  if (!(eps.Sign() > 0 && eps < Rational(1))) {
    throw ModelError("eps must satisfy 0 < eps < 1");
  }
  if (b.Sign() <= 0) throw ModelError("b must be positive");
  if (copies < 1) throw ModelError("copies must be at least 1");
  const Rational reduced = b * (Rational(1) - eps);
  BudgetGame::Builder builder(Variant::kOrdered);
  int priority = 2 * copies;
  for (int c = 1; c <= copies; ++c) {
    const std::string tag = copies == 1 ? "" : "c" + std::to_string(c) + "_";
    const ResourceIndex r1 = builder.AddResource(tag + "r1", b);
    const ResourceIndex r2 = builder.AddResource(tag + "r2", reduced);
    const PlayerIndex p1 = builder.AddPlayer(tag + "p1", priority--);
    const TaskIndex t11 = builder.AddTask(p1, tag + "t1_1", {{r1, b}});
    const TaskIndex t12 = builder.AddTask(p1, tag + "t1_2", {{r2, reduced}});
    builder.AddStrategy(p1, {t11});
    builder.AddStrategy(p1, {t12});
    const PlayerIndex p2 = builder.AddPlayer(tag + "p2", priority--);
    builder.AddStrategy(p2, {builder.AddTask(p2, tag + "t2", {{r1, b}})});
  }
  return std::move(builder).Build();
}

// ---------------------------------------------------------------------------

namespace {

void ValidateFormula(const MonotoneFormula& formula) {
  const int n = static_cast<int>(formula.variables.size());
  std::set<std::string> names(formula.variables.begin(),
                              formula.variables.end());
  if (static_cast<int>(names.size()) != n) {
    throw ModelError("formula repeats a variable name");
  }
  for (const auto& clause : formula.clauses) {
    for (int v : clause) {
      if (v < 0 || v >= n) throw ModelError("clause names an unknown variable");
    }
    if (clause[0] == clause[1] || clause[0] == clause[2] ||
        clause[1] == clause[2]) {
      throw ModelError("clause repeats a variable");
    }
  }
}

}  // namespace

std::vector<int> OccurrenceCounts(const MonotoneFormula& formula) {
  std::vector<int> counts(formula.variables.size(), 0);
  for (const auto& clause : formula.clauses) {
    for (int v : clause) ++counts.at(v);
  }
  return counts;
}

bool OneInThreeSatisfiable(const MonotoneFormula& formula) {
  ValidateFormula(formula);
  const int n = static_cast<int>(formula.variables.size());
  if (n > 24) throw LimitExceeded("too many variables for exhaustive search");
  for (unsigned long assignment = 0; assignment < (1ul << n); ++assignment) {
    bool ok = true;
    for (const auto& clause : formula.clauses) {
      int trues = 0;
      for (int v : clause) trues += (assignment >> v) & 1ul;
      if (trues != 1) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

BudgetGame GenerateOneInThree(const MonotoneFormula& formula) {
  ValidateFormula(formula);
  BudgetGame::Builder builder(Variant::kOrdered);
  std::vector<ResourceIndex> false_side, true_side;
  for (size_t j = 0; j < formula.clauses.size(); ++j) {
    const std::string tag = "c" + std::to_string(j + 1);
    false_side.push_back(builder.AddResource(tag + "_0", Rational(2)));
    true_side.push_back(builder.AddResource(tag + "_1", Rational(1)));
  }
  const int n = static_cast<int>(formula.variables.size());
  for (int i = 0; i < n; ++i) {
    std::vector<Demand> zero, one;
    for (size_t j = 0; j < formula.clauses.size(); ++j) {
      const auto& clause = formula.clauses[j];
      if (std::find(clause.begin(), clause.end(), i) == clause.end()) continue;
      zero.push_back({false_side[j], Rational(1)});
      one.push_back({true_side[j], Rational(1)});
    }
    const std::string& id = formula.variables[i];
    const PlayerIndex p = builder.AddPlayer(id, n - i);
    const TaskIndex t0 = builder.AddTask(p, "0_" + id, std::move(zero));
    const TaskIndex t1 = builder.AddTask(p, "1_" + id, std::move(one));
    builder.AddStrategy(p, {t0});
    builder.AddStrategy(p, {t1});
  }
  return std::move(builder).Build();
}

// ---------------------------------------------------------------------------

namespace {

// Game description in which every connection is full (demand = budget).
struct CounterBlueprint {
  struct PlayerSpec {
    std::string id;
    Rational equilibrium_utility;
  };
  std::vector<PlayerSpec> players;  // highest priority first
  std::vector<std::pair<std::string, Rational>> resources;
  std::vector<std::pair<std::string, std::string>> connections;  // task, res

  void Connect(const std::string& task, const std::string& resource) {
    connections.emplace_back(task, resource);
  }
};

std::string Task0(const std::string& player) { return player + "_0"; }
std::string Task1(const std::string& player) { return player + "_1"; }

CounterBlueprint BuildCounter(int n) {
  CounterBlueprint bp;
  if (n == 1) {
    bp.players.push_back({"1", Rational(2)});
    bp.resources.emplace_back("B1_r1", Rational(1));
    bp.resources.emplace_back("B1_r2", Rational(2));
    bp.Connect(Task0("1"), "B1_r1");
    bp.Connect(Task1("1"), "B1_r2");
    return bp;
  }
  bp = BuildCounter(n - 1);
  const int m = static_cast<int>(bp.players.size());
  Rational total;
  for (const auto& p : bp.players) total += p.equilibrium_utility;
  const std::string level = "B" + std::to_string(n) + "_";
  const std::string top = std::to_string(n);
  const std::string aux = "aux" + std::to_string(n);

  auto add = [&](const std::string& name, const Rational& budget) {
    bp.resources.emplace_back(level + name, budget);
    return level + name;
  };

  // Reset: player n leaves its first task once every inner player plays its
  // second one, which hands the r2 budgets back to the inner first tasks.
  for (const auto& p : bp.players) {
    const std::string r0 = add("r0_" + p.id, Rational(1));
    bp.Connect(Task0(p.id), r0);
    bp.Connect(Task1(top), r0);
    bp.Connect(Task1(p.id), add("r1_" + p.id, Rational(1)));
    const std::string r2 = add("r2_" + p.id, p.equilibrium_utility + 2);
    bp.Connect(Task0(top), r2);
    bp.Connect(Task0(p.id), r2);
  }
  bp.Connect(Task0(top), add("r", Rational(m - 1)));
  bp.Connect(Task1(top), add("r_prime", total + Rational(2 * m)));

  // Restart: the auxiliary player leaves its first task once the inner game
  // is back at its start, which hands the r5 budgets to the inner second
  // tasks. r3/r4 add one unit to both strategies of each inner player.
  for (const auto& p : bp.players) {
    const std::string r3 = add("r3_" + p.id, Rational(1));
    bp.Connect(Task1(aux), r3);
    bp.Connect(Task1(p.id), r3);
  }
  const std::string r3_top = add("r3_" + top, Rational(1));
  bp.Connect(Task1(aux), r3_top);
  bp.Connect(Task0(top), r3_top);
  for (const auto& p : bp.players) {
    bp.Connect(Task0(p.id), add("r4_" + p.id, Rational(1)));
  }
  bp.Connect(Task1(top), add("r4_" + top, Rational(1)));
  for (const auto& p : bp.players) {
    const std::string r5 = add("r5_" + p.id, p.equilibrium_utility + 2);
    bp.Connect(Task0(aux), r5);
    bp.Connect(Task1(p.id), r5);
  }
  bp.Connect(Task1(aux), add("r_aux", total + Rational(m)));

  std::vector<CounterBlueprint::PlayerSpec> players;
  players.push_back({aux, total + Rational(2 * m + 1)});
  players.push_back({top, total + Rational(3 * m + 1)});
  for (auto& p : bp.players) {
    players.push_back({p.id, p.equilibrium_utility * 2 + 3});
  }
  bp.players = std::move(players);
  return bp;
}

}  // namespace

ExponentialFamily GenerateExponentialFamily(int n) {
  if (n < 1) throw ModelError("exponential family needs n >= 1");
  const CounterBlueprint bp = BuildCounter(n);

  BudgetGame::Builder builder(Variant::kOrdered);
  std::map<std::string, ResourceIndex> resources;
  for (const auto& [name, budget] : bp.resources) {
    resources[name] = builder.AddResource(name, budget);
  }
  std::map<std::string, std::vector<Demand>> demands;
  for (const auto& [task, resource] : bp.connections) {
    const ResourceIndex r = resources.at(resource);
    demands[task].push_back({r, bp.resources[r].second});
  }
  const int players = static_cast<int>(bp.players.size());
  for (int k = 0; k < players; ++k) {
    const std::string& id = bp.players[k].id;
    const PlayerIndex p = builder.AddPlayer(id, players - k);
    const TaskIndex t0 = builder.AddTask(p, Task0(id), demands[Task0(id)]);
    const TaskIndex t1 = builder.AddTask(p, Task1(id), demands[Task1(id)]);
    builder.AddStrategy(p, {t0});
    builder.AddStrategy(p, {t1});
  }
  ExponentialFamily family{std::move(builder).Build(), {}, {}, {}};
  family.initial = DefaultState(family.game);
  for (const auto& p : bp.players) {
    family.equilibrium_utilities.push_back(p.equilibrium_utility);
  }
  for (int i = 1; i <= n; ++i) {
    family.base_players.push_back(family.game.PlayerByName(std::to_string(i)));
  }
  return family;
}

// ---------------------------------------------------------------------------

GadgetVerification VerifyCoverageGadget(const CoverageInstance& instance,
                                        const BudgetGame& game) {
  GadgetVerification v;
  const auto index = IndexUniverse(instance.universe);
  const int best_cover = MaxCoverage(instance);
  const Rational best_welfare = BruteForceOptimum(game).welfare;

  // Each strategy index is a set index; compare every profile.
  bool per_profile = true;
  StrategyProfile profile(game.num_players(), 0);
  const int q = static_cast<int>(instance.sets.size());
  while (true) {
    std::set<int> covered;
    for (int k : profile) {
      for (const std::string& e : instance.sets[k]) covered.insert(index.at(e));
    }
    if (SelectionWelfare(game, SelectedTasks(game, profile)) !=
        Rational(static_cast<std::int64_t>(covered.size()))) {
      per_profile = false;
      break;
    }
    int i = game.num_players() - 1;
    for (; i >= 0; --i) {
      if (++profile[i] < q) break;
      profile[i] = 0;
    }
    if (i < 0) break;
  }
  v.game_side = best_welfare == Rational(best_cover) && per_profile;
  v.instance_side = true;
  v.consistent = v.game_side;
  v.detail =
      "max welfare " + best_welfare.ToString() + ", max coverage " +
      std::to_string(best_cover) +
      (per_profile ? "" : ", some profile welfare differs from its cover");
  return v;
}

GadgetVerification VerifyNeGadget(const X3CInstance& instance,
                                  const BudgetGame& game) {
  GadgetVerification v;
  const auto equilibria =
      EnumerateEquilibria(game, EquilibriumKind::kNash, SearchMode::kProfiles);
  v.game_side = !equilibria.empty();
  v.instance_side = ExactCoverExists(instance);
  v.consistent = v.game_side == v.instance_side;
  v.detail = std::to_string(equilibria.size()) +
             " Nash equilibria; exact cover " +
             (v.instance_side ? "exists" : "does not exist");
  return v;
}

GadgetVerification VerifyOneInThreeGadget(const MonotoneFormula& formula,
                                          const BudgetGame& game) {
  GadgetVerification v;
  Rational target;
  for (int k : OccurrenceCounts(formula)) target += Rational(k);
  StrategyProfile profile(game.num_players(), 0);
  int witnesses = 0;
  while (true) {
    const GameState state = MakeState(game, profile);
    if (SocialWelfare(game, state) == target &&
        CheckSuperStrong(game, state).holds()) {
      ++witnesses;
    }
    int i = game.num_players() - 1;
    for (; i >= 0; --i) {
      if (++profile[i] < 2) break;
      profile[i] = 0;
    }
    if (i < 0) break;
  }
  v.game_side = witnesses > 0;
  v.instance_side = OneInThreeSatisfiable(formula);
  v.consistent = v.game_side == v.instance_side;
  v.detail = std::to_string(witnesses) +
             " super-strong profiles with welfare " + target.ToString() +
             "; formula " + (v.instance_side ? "satisfiable" : "unsatisfiable");
  return v;
}

}  // namespace budget_games
