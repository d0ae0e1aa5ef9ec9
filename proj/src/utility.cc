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

#include "budget_games/utility.h"

#include <algorithm>
#include <string>

#include "budget_games/errors.h"

namespace budget_games {
namespace {

void CheckTaskQuery(const BudgetGame& game, const GameState& state,
                    TaskIndex task, ResourceIndex resource) {
  if (task < 0 || task >= game.num_tasks()) throw ModelError("unknown task");
  if (resource < 0 || resource >= game.num_resources()) {
    throw ModelError("unknown resource");
  }
  const Player& owner = game.player(game.task(task).owner);
  const Strategy& chosen =
      owner.strategies.at(state.profile.at(game.task(task).owner));
  if (!std::binary_search(chosen.begin(), chosen.end(), task)) {
    throw ModelError("task '" + game.task(task).id +
                     "' is not selected in the profile");
  }
}

Rational ShareOf(const std::vector<TaskShare>& shares, TaskIndex task) {
  for (const TaskShare& s : shares) {
    if (s.task == task) return s.amount;
  }
  return Rational(0);
}

}  // namespace

std::vector<TaskShare> AllocateResource(const BudgetGame& game, ResourceIndex r,
                                        const std::vector<bool>& selected,
                                        const std::vector<TaskIndex>* order) {
  const Rational& budget = game.resource(r).budget;
  const auto& connections = game.connections(r);
  std::vector<TaskShare> shares;
  if (game.variant() == Variant::kStandard) {
    Rational total;
    for (const Connection& c : connections) {
      if (selected[c.task]) total += c.demand;
    }
    for (const Connection& c : connections) {
      if (!selected[c.task]) continue;
      if (total <= budget) {
        shares.push_back({c.task, c.demand});
      } else {
        shares.push_back({c.task, budget * c.demand / total});
      }
    }
    return shares;
  }

  auto serve = [&](TaskIndex t, const Rational& d, Rational& used) {
    const Rational remaining = Max(Rational(0), budget - used);
    shares.push_back({t, Min(d, remaining)});
    used += d;
  };
  Rational used;
  if (order == nullptr) {
    for (const Connection& c : connections) {
      if (selected[c.task]) serve(c.task, c.demand, used);
    }
  } else {
    for (TaskIndex t : *order) {
      if (!selected[t]) continue;
      const int slot = game.connection_slot(r, t);
      if (slot >= 0) serve(t, connections[slot].demand, used);
    }
    std::sort(
        shares.begin(), shares.end(),
        [](const TaskShare& a, const TaskShare& b) { return a.task < b.task; });
  }
  return shares;
}

std::vector<TaskShare> AllocateResource(const BudgetGame& game,
                                        const GameState& state,
                                        ResourceIndex r) {
  const std::vector<bool> selected = SelectedTasks(game, state.profile);
  const std::vector<TaskIndex>* order =
      game.variant() == Variant::kOrdered ? &state.order.at(r) : nullptr;
  return AllocateResource(game, r, selected, order);
}

Rational StandardTaskUtility(const BudgetGame& game, const GameState& state,
                             TaskIndex task, ResourceIndex resource) {
  if (game.variant() != Variant::kStandard) {
    throw ModelError("standard utility queried on an ordered game");
  }
  CheckTaskQuery(game, state, task, resource);
  return ShareOf(AllocateResource(game, state, resource), task);
}

Rational OrderedTaskUtility(const BudgetGame& game, const GameState& state,
                            TaskIndex task, ResourceIndex resource) {
  if (game.variant() != Variant::kOrdered) {
    throw ModelError("ordered utility queried on a standard game");
  }
  CheckTaskQuery(game, state, task, resource);
  return ShareOf(AllocateResource(game, state, resource), task);
}

Rational TaskUtility(const BudgetGame& game, const GameState& state,
                     TaskIndex task, ResourceIndex resource) {
  return game.variant() == Variant::kOrdered
             ? OrderedTaskUtility(game, state, task, resource)
             : StandardTaskUtility(game, state, task, resource);
}

Rational PlayerUtility(const BudgetGame& game, const GameState& state,
                       PlayerIndex player) {
  if (player < 0 || player >= game.num_players()) {
    throw ModelError("unknown player index " + std::to_string(player));
  }
  const std::vector<bool> selected = SelectedTasks(game, state.profile);
  const Strategy& chosen =
      game.player(player).strategies.at(state.profile.at(player));
  std::vector<ResourceIndex> touched;
  for (TaskIndex t : chosen) {
    for (const Demand& d : game.task(t).demands) touched.push_back(d.resource);
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

  Rational utility;
  for (ResourceIndex r : touched) {
    const std::vector<TaskIndex>* order =
        game.variant() == Variant::kOrdered ? &state.order.at(r) : nullptr;
    for (const TaskShare& s : AllocateResource(game, r, selected, order)) {
      if (game.task(s.task).owner == player) utility += s.amount;
    }
  }
  return utility;
}

std::vector<Rational> PlayerUtilities(const BudgetGame& game,
                                      const GameState& state) {
  const std::vector<bool> selected = SelectedTasks(game, state.profile);
  std::vector<Rational> utilities(game.num_players());
  for (ResourceIndex r = 0; r < game.num_resources(); ++r) {
    const std::vector<TaskIndex>* order =
        game.variant() == Variant::kOrdered ? &state.order.at(r) : nullptr;
    for (const TaskShare& s : AllocateResource(game, r, selected, order)) {
      utilities[game.task(s.task).owner] += s.amount;
    }
  }
  return utilities;
}

Rational SocialWelfare(const BudgetGame& game, const GameState& state) {
  Rational welfare;
  for (const Rational& u : PlayerUtilities(game, state)) welfare += u;
  return welfare;
}

Rational SelectionWelfare(const BudgetGame& game,
                          const std::vector<bool>& selected) {
  Rational welfare;
  for (ResourceIndex r = 0; r < game.num_resources(); ++r) {
    for (const TaskShare& s : AllocateResource(game, r, selected, nullptr)) {
      welfare += s.amount;
    }
  }
  return welfare;
}

std::vector<ValidityViolation> CheckValidity(const BudgetGame& game,
                                             const GameState& state) {
  std::vector<ValidityViolation> violations;
  const std::vector<bool> selected = SelectedTasks(game, state.profile);
  for (ResourceIndex r = 0; r < game.num_resources(); ++r) {
    const std::vector<TaskIndex>* order =
        game.variant() == Variant::kOrdered ? &state.order.at(r) : nullptr;
    Rational allocated;
    for (const TaskShare& s : AllocateResource(game, r, selected, order)) {
      allocated += s.amount;
    }
    if (allocated > game.resource(r).budget) {
      violations.push_back({r, allocated, game.resource(r).budget});
    }
  }
  return violations;
}

}  // namespace budget_games
