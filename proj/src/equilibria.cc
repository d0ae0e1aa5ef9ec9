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

#include "budget_games/equilibria.h"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "budget_games/optimize.h"
#include "budget_games/utility.h"

namespace budget_games {
namespace {

EquilibriumReport MakeReport(const BudgetGame& game, const GameState& state,
                             EquilibriumKind kind) {
  EquilibriumReport report;
  report.kind = kind;
  report.state = state;
  report.welfare = SocialWelfare(game, state);
  return report;
}

// Searches coalition deviations. With `super_strong` a deviation counts when
// every member is weakly better off and one strictly; otherwise every member
// must be strictly better off.
std::optional<Deviation> FindCoalitionDeviation(
    const BudgetGame& game, const GameState& state, bool super_strong,
    TieBreak rule, const EnumerationLimits& limits) {
  const int n = game.num_players();
  if (n > limits.max_coalition_players) {
    throw LimitExceeded("coalition enumeration over " + std::to_string(n) +
                        " players exceeds the cap of " +
                        std::to_string(limits.max_coalition_players));
  }
  if (game.ProfileCount(limits.max_states) > limits.max_states) {
    throw LimitExceeded("joint deviation space exceeds the state cap");
  }
  const std::vector<Rational> before = PlayerUtilities(game, state);

  for (int size = 1; size <= n; ++size) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      std::vector<PlayerIndex> members;
      for (PlayerIndex i = 0; i < n; ++i) {
        if (mask & (1u << i)) members.push_back(i);
      }
      // Each member ranges over its strategies other than the current one.
      std::vector<std::vector<int>> options(members.size());
      bool feasible = true;
      for (size_t k = 0; k < members.size(); ++k) {
        const PlayerIndex i = members[k];
        const int count = static_cast<int>(game.player(i).strategies.size());
        for (int s = 0; s < count; ++s) {
          if (s != state.profile[i]) options[k].push_back(s);
        }
        feasible = feasible && !options[k].empty();
      }
      if (!feasible) continue;

      std::vector<size_t> pick(members.size(), 0);
      while (true) {
        Deviation deviation;
        for (size_t k = 0; k < members.size(); ++k) {
          deviation.moves.push_back({members[k], options[k][pick[k]]});
        }
        const std::vector<Rational> after =
            PlayerUtilities(game, ApplyDeviation(game, state, deviation, rule));
        bool all_weak = true;
        bool all_strict = true;
        bool any_strict = false;
        for (PlayerIndex i : members) {
          all_weak = all_weak && after[i] >= before[i];
          all_strict = all_strict && after[i] > before[i];
          any_strict = any_strict || after[i] > before[i];
        }
        if (super_strong ? (all_weak && any_strict) : all_strict) {
          return deviation;
        }
        bool advanced = false;
        for (size_t k = members.size(); k-- > 0;) {
          if (++pick[k] < options[k].size()) {
            advanced = true;
            break;
          }
          pick[k] = 0;
        }
        if (!advanced) break;
      }
    }
  }
  return std::nullopt;
}

bool NextProfile(const BudgetGame& game, StrategyProfile& profile) {
  for (int i = game.num_players() - 1; i >= 0; --i) {
    if (++profile[i] < static_cast<int>(game.player(i).strategies.size())) {
      return true;
    }
    profile[i] = 0;
  }
  return false;
}

// Every per-resource arrangement of the selected tasks connected to it.
std::vector<GameState> AllOrderStates(const BudgetGame& game,
                                      const StrategyProfile& profile,
                                      long long max_states) {
  const std::vector<bool> selected = SelectedTasks(game, profile);
  std::vector<std::vector<std::vector<TaskIndex>>> arrangements;
  long long total = 1;
  for (ResourceIndex r = 0; r < game.num_resources(); ++r) {
    std::vector<TaskIndex> front;
    for (const Connection& c : game.connections(r)) {
      if (selected[c.task]) front.push_back(c.task);
    }
    std::vector<std::vector<TaskIndex>> orders;
    do {
      std::vector<TaskIndex> order = front;
      for (TaskIndex t = 0; t < game.num_tasks(); ++t) {
        if (std::find(front.begin(), front.end(), t) == front.end()) {
          order.push_back(t);
        }
      }
      orders.push_back(std::move(order));
    } while (std::next_permutation(front.begin(), front.end()));
    total *= static_cast<long long>(orders.size());
    if (total > max_states) {
      throw LimitExceeded("per-resource order enumeration exceeds the cap");
    }
    arrangements.push_back(std::move(orders));
  }
  std::vector<GameState> states;
  std::vector<size_t> pick(arrangements.size(), 0);
  while (true) {
    GameState state;
    state.profile = profile;
    for (ResourceIndex r = 0; r < game.num_resources(); ++r) {
      state.order.push_back(arrangements[r][pick[r]]);
    }
    states.push_back(std::move(state));
    int r = game.num_resources() - 1;
    for (; r >= 0; --r) {
      if (++pick[r] < arrangements[r].size()) break;
      pick[r] = 0;
    }
    if (r < 0) break;
  }
  return states;
}

}  // namespace

std::string_view EquilibriumKindName(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kNash:
      return "nash";
    case EquilibriumKind::kStrong:
      return "strong";
    case EquilibriumKind::kSuperStrong:
      return "super_strong";
  }
  return "";
}

std::optional<EquilibriumKind> ParseEquilibriumKind(std::string_view name) {
  if (name == "nash") return EquilibriumKind::kNash;
  if (name == "strong") return EquilibriumKind::kStrong;
  if (name == "super_strong") return EquilibriumKind::kSuperStrong;
  return std::nullopt;
}

std::string_view SearchModeName(SearchMode mode) {
  switch (mode) {
    case SearchMode::kProfiles:
      return "profiles";
    case SearchMode::kProfilesTimesInsertions:
      return "profiles_x_insertions";
    case SearchMode::kAllOrders:
      return "all_orders";
  }
  return "";
}

std::optional<SearchMode> ParseSearchMode(std::string_view name) {
  if (name == "profiles") return SearchMode::kProfiles;
  if (name == "profiles_x_insertions") {
    return SearchMode::kProfilesTimesInsertions;
  }
  if (name == "all_orders") return SearchMode::kAllOrders;
  return std::nullopt;
}

EquilibriumReport CheckNash(const BudgetGame& game, const GameState& state) {
  ValidateState(game, state);
  EquilibriumReport report = MakeReport(game, state, EquilibriumKind::kNash);
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    if (auto br = ImprovingResponse(game, state, i)) {
      report.witness = Deviation::Single(i, br->strategy);
      break;
    }
  }
  return report;
}

EquilibriumReport CheckStrong(const BudgetGame& game, const GameState& state,
                              TieBreak rule, const EnumerationLimits& limits) {
  ValidateState(game, state);
  EquilibriumReport report = MakeReport(game, state, EquilibriumKind::kStrong);
  report.witness = FindCoalitionDeviation(game, state, false, rule, limits);
  return report;
}

EquilibriumReport CheckSuperStrong(const BudgetGame& game,
                                   const GameState& state, TieBreak rule,
                                   const EnumerationLimits& limits) {
  ValidateState(game, state);
  EquilibriumReport report =
      MakeReport(game, state, EquilibriumKind::kSuperStrong);
  report.witness = FindCoalitionDeviation(game, state, true, rule, limits);
  return report;
}

EquilibriumReport CheckEquilibrium(const BudgetGame& game,
                                   const GameState& state, EquilibriumKind kind,
                                   TieBreak rule,
                                   const EnumerationLimits& limits) {
  switch (kind) {
    case EquilibriumKind::kNash:
      return CheckNash(game, state);
    case EquilibriumKind::kStrong:
      return CheckStrong(game, state, rule, limits);
    case EquilibriumKind::kSuperStrong:
      return CheckSuperStrong(game, state, rule, limits);
  }
  throw ModelError("unknown equilibrium kind");
}

GameState SequentialInsertion(const BudgetGame& game,
                              const std::vector<PlayerIndex>& insertion_order) {
  if (game.variant() != Variant::kOrdered) {
    throw ModelError("sequential insertion needs an ordered game");
  }
  std::vector<bool> seen(game.num_players(), false);
  for (PlayerIndex i : insertion_order) {
    if (i < 0 || i >= game.num_players() || seen[i]) {
      throw ModelError("insertion order repeats or names an unknown player");
    }
    seen[i] = true;
  }
  if (static_cast<int>(insertion_order.size()) != game.num_players()) {
    throw ModelError("insertion order must contain every player");
  }

  StrategyProfile profile(game.num_players(), 0);
  std::vector<bool> selected(game.num_tasks(), false);
  std::vector<TaskIndex> served;  // tasks of inserted players, in order
  for (PlayerIndex i : insertion_order) {
    const auto& strategies = game.player(i).strategies;
    int best = -1;
    Rational best_value;
    for (int k = 0; k < static_cast<int>(strategies.size()); ++k) {
      std::vector<TaskIndex> order = served;
      order.insert(order.end(), strategies[k].begin(), strategies[k].end());
      for (TaskIndex t : strategies[k]) selected[t] = true;
      Rational value;
      std::vector<ResourceIndex> touched;
      for (TaskIndex t : strategies[k]) {
        for (const Demand& d : game.task(t).demands) {
          touched.push_back(d.resource);
        }
      }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      for (ResourceIndex r : touched) {
        for (const TaskShare& s : AllocateResource(game, r, selected, &order)) {
          if (game.task(s.task).owner == i) value += s.amount;
        }
      }
      for (TaskIndex t : strategies[k]) selected[t] = false;
      if (best < 0 || value > best_value) {
        best = k;
        best_value = std::move(value);
      }
    }
    profile[i] = best;
    for (TaskIndex t : strategies[best]) {
      selected[t] = true;
      served.push_back(t);
    }
  }
  return MakeBlockOrderedState(game, profile, insertion_order);
}

std::vector<EquilibriumReport> EnumerateEquilibria(
    const BudgetGame& game, EquilibriumKind kind, SearchMode search,
    TieBreak rule, const EnumerationLimits& limits) {
  if (game.ProfileCount(limits.max_profiles) > limits.max_profiles) {
    throw LimitExceeded("profile space exceeds the enumeration cap of " +
                        std::to_string(limits.max_profiles));
  }
  const bool ordered = game.variant() == Variant::kOrdered;
  if (ordered && search == SearchMode::kProfilesTimesInsertions &&
      game.num_players() > limits.max_coalition_players) {
    throw LimitExceeded("insertion-order enumeration over " +
                        std::to_string(game.num_players()) +
                        " players exceeds the cap");
  }
  if (ordered && search == SearchMode::kAllOrders &&
      game.num_tasks() > limits.max_exhaustive_order_tasks) {
    throw LimitExceeded("exhaustive order search is limited to " +
                        std::to_string(limits.max_exhaustive_order_tasks) +
                        " tasks");
  }

  std::vector<EquilibriumReport> found;
  long long visited = 0;
  StrategyProfile profile(game.num_players(), 0);
  do {
    std::vector<GameState> candidates;
    if (!ordered || search == SearchMode::kProfiles) {
      candidates.push_back(MakeState(game, profile));
    } else if (search == SearchMode::kProfilesTimesInsertions) {
      std::set<std::vector<TaskIndex>> orders;
      std::vector<PlayerIndex> permutation(game.num_players());
      for (PlayerIndex i = 0; i < game.num_players(); ++i) permutation[i] = i;
      do {
        GameState state = MakeBlockOrderedState(game, profile, permutation);
        if (orders
                .insert(state.order.empty() ? std::vector<TaskIndex>{}
                                            : state.order.front())
                .second) {
          candidates.push_back(std::move(state));
        }
      } while (std::next_permutation(permutation.begin(), permutation.end()));
      std::sort(candidates.begin(), candidates.end(),
                [](const GameState& a, const GameState& b) {
                  return a.order < b.order;
                });
    } else {
      candidates = AllOrderStates(game, profile, limits.max_states);
    }
    visited += static_cast<long long>(candidates.size());
    if (visited > limits.max_states) {
      throw LimitExceeded("equilibrium search exceeds the state cap");
    }
    for (const GameState& state : candidates) {
      EquilibriumReport report =
          CheckEquilibrium(game, state, kind, rule, limits);
      if (report.holds()) found.push_back(std::move(report));
    }
  } while (NextProfile(game, profile));
  return found;
}

PoAReport MeasurePoA(const BudgetGame& game, EquilibriumKind kind,
                     std::optional<SearchMode> search, TieBreak rule,
                     const EnumerationLimits& limits) {
  const SearchMode mode = search.value_or(
      game.variant() == Variant::kOrdered ? SearchMode::kProfilesTimesInsertions
                                          : SearchMode::kProfiles);
  const std::vector<EquilibriumReport> equilibria =
      EnumerateEquilibria(game, kind, mode, rule, limits);
  if (equilibria.empty()) {
    throw NoEquilibrium(
        "no " + std::string(EquilibriumKindName(kind)) +
        " equilibrium found; the price of anarchy is undefined");
  }
  PoAReport report;
  report.opt_welfare = BruteForceOptimum(game).welfare;
  report.eq_count = static_cast<long long>(equilibria.size());
  report.best_eq_welfare = equilibria.front().welfare;
  report.worst_eq_welfare = equilibria.front().welfare;
  for (const EquilibriumReport& eq : equilibria) {
    report.best_eq_welfare = Max(report.best_eq_welfare, eq.welfare);
    report.worst_eq_welfare = Min(report.worst_eq_welfare, eq.welfare);
  }
  auto ratio = [&](const Rational& denominator) -> std::optional<Rational> {
    if (!denominator.IsZero()) return report.opt_welfare / denominator;
    if (report.opt_welfare.IsZero()) return Rational(1);
    return std::nullopt;
  };
  report.poa = ratio(report.worst_eq_welfare);
  report.pos = ratio(report.best_eq_welfare);
  return report;
}

}  // namespace budget_games
