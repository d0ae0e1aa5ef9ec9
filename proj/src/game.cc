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

#include "budget_games/game.h"

#include <algorithm>
#include <set>

#include "budget_games/errors.h"

namespace budget_games {

std::string_view VariantName(Variant variant) {
  return variant == Variant::kOrdered ? "ordered" : "standard";
}

std::optional<Variant> ParseVariant(std::string_view name) {
  if (name == "standard") return Variant::kStandard;
  if (name == "ordered") return Variant::kOrdered;
  return std::nullopt;
}

Rational BudgetGame::demand(TaskIndex t, ResourceIndex r) const {
  const int slot = connection_slot_.at(r).at(t);
  return slot < 0 ? Rational(0) : connections_[r][slot].demand;
}

ResourceIndex BudgetGame::ResourceByName(std::string_view id) const {
  auto it = resource_ids_.find(id);
  if (it == resource_ids_.end()) {
    throw ModelError("unknown resource '" + std::string(id) + "'");
  }
  return it->second;
}

TaskIndex BudgetGame::TaskByName(std::string_view id) const {
  auto it = task_ids_.find(id);
  if (it == task_ids_.end()) {
    throw ModelError("unknown task '" + std::string(id) + "'");
  }
  return it->second;
}

PlayerIndex BudgetGame::PlayerByName(std::string_view id) const {
  auto it = player_ids_.find(id);
  if (it == player_ids_.end()) {
    throw ModelError("unknown player '" + std::string(id) + "'");
  }
  return it->second;
}

BudgetGame BudgetGame::WithVariant(Variant variant) const {
  BudgetGame copy = *this;
  copy.variant_ = variant;
  return copy;
}

long long BudgetGame::ProfileCount(long long cap) const {
  long long count = 1;
  for (const Player& p : players_) {
    count *= static_cast<long long>(p.strategies.size());
    if (count > cap) return cap + 1;
  }
  return count;
}

void BudgetGame::Finalize() {
  connections_.assign(resources_.size(), {});
  connection_slot_.assign(resources_.size(),
                          std::vector<int>(tasks_.size(), -1));
  for (TaskIndex t = 0; t < num_tasks(); ++t) {
    for (const Demand& d : tasks_[t].demands) {
      connection_slot_[d.resource][t] =
          static_cast<int>(connections_[d.resource].size());
      connections_[d.resource].push_back({t, d.amount});
    }
  }
  players_by_priority_.resize(players_.size());
  for (PlayerIndex i = 0; i < num_players(); ++i) players_by_priority_[i] = i;
  std::sort(players_by_priority_.begin(), players_by_priority_.end(),
            [&](PlayerIndex a, PlayerIndex b) {
              return players_[a].priority > players_[b].priority;
            });
}

ResourceIndex BudgetGame::Builder::AddResource(std::string id,
                                               Rational budget) {
  if (budget.Sign() < 0) {
    throw ModelError("resource '" + id + "' has a negative budget");
  }
  if (!game_.resource_ids_.emplace(id, game_.num_resources()).second) {
    throw ModelError("duplicate resource id '" + id + "'");
  }
  game_.resources_.push_back({std::move(id), std::move(budget)});
  return game_.num_resources() - 1;
}

PlayerIndex BudgetGame::Builder::AddPlayer(std::string id, int priority) {
  if (!game_.player_ids_.emplace(id, game_.num_players()).second) {
    throw ModelError("duplicate player id '" + id + "'");
  }
  Player player;
  player.id = std::move(id);
  player.priority = priority;
  game_.players_.push_back(std::move(player));
  return game_.num_players() - 1;
}

TaskIndex BudgetGame::Builder::AddTask(PlayerIndex owner, std::string id,
                                       std::vector<Demand> demands) {
  if (owner < 0 || owner >= game_.num_players()) {
    throw ModelError("task '" + id + "' has an unknown owner");
  }
  if (game_.task_ids_.count(id)) {
    throw ModelError("duplicate task id '" + id + "'");
  }
  std::sort(
      demands.begin(), demands.end(),
      [](const Demand& a, const Demand& b) { return a.resource < b.resource; });
  std::vector<Demand> kept;
  for (Demand& d : demands) {
    if (d.resource < 0 || d.resource >= game_.num_resources()) {
      throw ModelError("task '" + id + "' demands an unknown resource");
    }
    if (d.amount.Sign() < 0) {
      throw ModelError("task '" + id + "' has a negative demand on '" +
                       game_.resources_[d.resource].id + "'");
    }
    if (!kept.empty() && kept.back().resource == d.resource) {
      throw ModelError("task '" + id + "' lists resource '" +
                       game_.resources_[d.resource].id + "' twice");
    }
    if (!d.amount.IsZero()) kept.push_back(std::move(d));
  }
  game_.task_ids_.emplace(id, game_.num_tasks());
  game_.tasks_.push_back({std::move(id), owner, std::move(kept)});
  const TaskIndex t = game_.num_tasks() - 1;
  game_.players_[owner].tasks.push_back(t);
  return t;
}

int BudgetGame::Builder::AddStrategy(PlayerIndex player,
                                     std::vector<TaskIndex> tasks) {
  if (player < 0 || player >= game_.num_players()) {
    throw ModelError("strategy for an unknown player");
  }
  Player& p = game_.players_[player];
  std::sort(tasks.begin(), tasks.end());
  if (std::adjacent_find(tasks.begin(), tasks.end()) != tasks.end()) {
    throw ModelError("strategy of player '" + p.id + "' repeats a task");
  }
  for (TaskIndex t : tasks) {
    if (t < 0 || t >= game_.num_tasks() || game_.tasks_[t].owner != player) {
      throw ModelError("strategy of player '" + p.id +
                       "' uses a task the player does not own");
    }
  }
  p.strategies.push_back(std::move(tasks));
  return static_cast<int>(p.strategies.size()) - 1;
}

BudgetGame BudgetGame::Builder::Build() && {
  std::set<int> priorities;
  for (const Player& p : game_.players_) {
    if (p.strategies.empty()) {
      throw ModelError("player '" + p.id + "' has no strategies");
    }
    if (!priorities.insert(p.priority).second) {
      throw ModelError("player '" + p.id + "' reuses priority " +
                       std::to_string(p.priority));
    }
  }
  game_.Finalize();
  return std::move(game_);
}

std::vector<bool> SelectedTasks(const BudgetGame& game,
                                const StrategyProfile& profile) {
  std::vector<bool> selected(game.num_tasks(), false);
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    for (TaskIndex t : game.player(i).strategies.at(profile.at(i))) {
      selected[t] = true;
    }
  }
  return selected;
}

void ValidateProfile(const BudgetGame& game, const StrategyProfile& profile) {
  if (static_cast<int>(profile.size()) != game.num_players()) {
    throw ModelError("profile has " + std::to_string(profile.size()) +
                     " entries for " + std::to_string(game.num_players()) +
                     " players");
  }
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    const int count = static_cast<int>(game.player(i).strategies.size());
    if (profile[i] < 0 || profile[i] >= count) {
      throw ModelError("strategy index " + std::to_string(profile[i]) +
                       " out of range for player '" + game.player(i).id + "'");
    }
  }
}

void ValidateState(const BudgetGame& game, const GameState& state) {
  ValidateProfile(game, state.profile);
  if (game.variant() == Variant::kStandard) return;
  if (static_cast<int>(state.order.size()) != game.num_resources()) {
    throw ModelError("ordered state needs one order per resource");
  }
  for (ResourceIndex r = 0; r < game.num_resources(); ++r) {
    const auto& order = state.order[r];
    std::vector<bool> seen(game.num_tasks(), false);
    bool ok = static_cast<int>(order.size()) == game.num_tasks();
    for (TaskIndex t : order) {
      if (!ok) break;
      if (t < 0 || t >= game.num_tasks() || seen[t]) {
        ok = false;
      } else {
        seen[t] = true;
      }
    }
    if (!ok) {
      throw ModelError("order on resource '" + game.resource(r).id +
                       "' is not a permutation of all tasks");
    }
  }
}

GameState MakeBlockOrderedState(const BudgetGame& game, StrategyProfile profile,
                                const std::vector<PlayerIndex>& player_order) {
  ValidateProfile(game, profile);
  GameState state;
  state.profile = std::move(profile);
  if (game.variant() == Variant::kStandard) return state;
  std::vector<TaskIndex> order;
  order.reserve(game.num_tasks());
  std::vector<bool> placed(game.num_tasks(), false);
  for (PlayerIndex i : player_order) {
    for (TaskIndex t : game.player(i).strategies.at(state.profile.at(i))) {
      if (!placed[t]) {
        order.push_back(t);
        placed[t] = true;
      }
    }
  }
  for (TaskIndex t = 0; t < game.num_tasks(); ++t) {
    if (!placed[t]) order.push_back(t);
  }
  state.order.assign(game.num_resources(), order);
  return state;
}

GameState MakeState(const BudgetGame& game, StrategyProfile profile) {
  return MakeBlockOrderedState(game, std::move(profile),
                               game.players_by_priority());
}

GameState DefaultState(const BudgetGame& game) {
  return MakeState(game, StrategyProfile(game.num_players(), 0));
}

}  // namespace budget_games
