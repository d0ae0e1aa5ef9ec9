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

#ifndef BUDGET_GAMES_GAME_H_
#define BUDGET_GAMES_GAME_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "budget_games/rational.h"

namespace budget_games {

// Dense indices into the game's resource, task and player tables. Ids are the
// strings used in instance files; indices are what every algorithm works on.
using ResourceIndex = int;
using TaskIndex = int;
using PlayerIndex = int;

enum class Variant { kStandard, kOrdered };

std::string_view VariantName(Variant variant);
std::optional<Variant> ParseVariant(std::string_view name);

struct Resource {
  std::string id;
  Rational budget;
};

// Demand of a task on one resource. Only strictly positive demands are stored.
struct Demand {
  ResourceIndex resource;
  Rational amount;
};

struct Task {
  std::string id;
  PlayerIndex owner;
  std::vector<Demand> demands;  // sorted by resource
};

// A strategy is a set of the owner's tasks, kept sorted.
using Strategy = std::vector<TaskIndex>;

struct Player {
  std::string id;
  int priority = 0;  // larger value = higher priority
  std::vector<TaskIndex> tasks;
  std::vector<Strategy> strategies;
};

// A task connected to a resource, as seen from the resource side.
struct Connection {
  TaskIndex task;
  Rational demand;
};

// Immutable, validated budget game. Construct through BudgetGame::Builder.
class BudgetGame {
 public:
  class Builder;

  Variant variant() const { return variant_; }
  int num_resources() const { return static_cast<int>(resources_.size()); }
  int num_tasks() const { return static_cast<int>(tasks_.size()); }
  int num_players() const { return static_cast<int>(players_.size()); }

  const std::vector<Resource>& resources() const { return resources_; }
  const std::vector<Task>& tasks() const { return tasks_; }
  const std::vector<Player>& players() const { return players_; }
  const Resource& resource(ResourceIndex r) const { return resources_.at(r); }
  const Task& task(TaskIndex t) const { return tasks_.at(t); }
  const Player& player(PlayerIndex i) const { return players_.at(i); }

  // Tasks with positive demand on `r`, sorted by task index.
  const std::vector<Connection>& connections(ResourceIndex r) const {
    return connections_.at(r);
  }

  // t(r); zero when the task is not connected to the resource.
  Rational demand(TaskIndex t, ResourceIndex r) const;

  // Position of `t` in connections(r), or -1 when not connected.
  int connection_slot(ResourceIndex r, TaskIndex t) const {
    return connection_slot_[r][t];
  }

  // Id lookups. Throw ModelError for unknown ids.
  ResourceIndex ResourceByName(std::string_view id) const;
  TaskIndex TaskByName(std::string_view id) const;
  PlayerIndex PlayerByName(std::string_view id) const;

  // Player indices sorted by decreasing fixed priority.
  const std::vector<PlayerIndex>& players_by_priority() const {
    return players_by_priority_;
  }

  // The same game with a different utility rule.
  BudgetGame WithVariant(Variant variant) const;

  // Number of strategy profiles, saturating at `cap + 1`.
  long long ProfileCount(long long cap) const;

 private:
  BudgetGame() = default;
  void Finalize();

  Variant variant_ = Variant::kStandard;
  std::vector<Resource> resources_;
  std::vector<Task> tasks_;
  std::vector<Player> players_;
  std::vector<std::vector<Connection>> connections_;
  std::vector<std::vector<int>> connection_slot_;
  std::vector<PlayerIndex> players_by_priority_;
  std::map<std::string, ResourceIndex, std::less<>> resource_ids_;
  std::map<std::string, TaskIndex, std::less<>> task_ids_;
  std::map<std::string, PlayerIndex, std::less<>> player_ids_;
};

class BudgetGame::Builder {
 public:
  explicit Builder(Variant variant) { game_.variant_ = variant; }

  ResourceIndex AddResource(std::string id, Rational budget);
  PlayerIndex AddPlayer(std::string id, int priority);
  // Zero demands are dropped; negative demands are rejected.
  TaskIndex AddTask(PlayerIndex owner, std::string id,
                    std::vector<Demand> demands);
  int AddStrategy(PlayerIndex player, std::vector<TaskIndex> tasks);

  // Validates every model invariant and returns the game. Throws ModelError.
  BudgetGame Build() &&;

 private:
  BudgetGame game_;
};

// One chosen strategy index per player.
using StrategyProfile = std::vector<int>;

// A profile plus, for ordered games, one total order over all tasks per
// resource (earlier = served first). Standard games leave `order` empty.
struct GameState {
  StrategyProfile profile;
  std::vector<std::vector<TaskIndex>> order;

  friend bool operator==(const GameState&, const GameState&) = default;
};

// Per-task selection flags induced by a profile.
std::vector<bool> SelectedTasks(const BudgetGame& game,
                                const StrategyProfile& profile);

// Throws ModelError unless every index is in range and, for ordered games,
// every order is a permutation of all tasks.
void ValidateState(const BudgetGame& game, const GameState& state);
void ValidateProfile(const BudgetGame& game, const StrategyProfile& profile);

// State for `profile`. Ordered games get the order implied by priority: the
// selected tasks of the highest-priority player first, then the next player,
// and so on; see MakeBlockOrderedState.
GameState MakeState(const BudgetGame& game, StrategyProfile profile);

// All players on strategy 0.
GameState DefaultState(const BudgetGame& game);

// Ordered-game state where players' task blocks are appended in
// `player_order`; tasks outside the profile follow in index order.
GameState MakeBlockOrderedState(const BudgetGame& game, StrategyProfile profile,
                                const std::vector<PlayerIndex>& player_order);

}  // namespace budget_games

#endif  // BUDGET_GAMES_GAME_H_
