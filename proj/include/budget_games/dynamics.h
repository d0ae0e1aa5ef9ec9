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

#ifndef BUDGET_GAMES_DYNAMICS_H_
#define BUDGET_GAMES_DYNAMICS_H_

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "budget_games/game.h"
#include "budget_games/rational.h"

namespace budget_games {

struct Move {
  PlayerIndex player;
  int strategy;

  friend bool operator==(const Move&, const Move&) = default;
};

// A joint strategy change of a coalition. Moves are kept sorted by player.
struct Deviation {
  std::vector<Move> moves;

  static Deviation Single(PlayerIndex player, int strategy) {
    return Deviation{{Move{player, strategy}}};
  }
  friend bool operator==(const Deviation&, const Deviation&) = default;
};

// How newly selected tasks of simultaneous movers are ordered among each
// other. kFixed uses Player::priority; kMaxUtility ranks players by their
// current utility, falling back to Player::priority on ties.
enum class TieBreak { kFixed, kMaxUtility };

std::string_view TieBreakName(TieBreak rule);

// Players from highest to lowest priority under `rule` in `state`.
std::vector<PlayerIndex> PriorityOrder(const BudgetGame& game,
                                       const GameState& state, TieBreak rule);

// Applies `deviation`. In ordered games every newly selected task (selected
// after but not before, for some mover) moves behind all other tasks on every
// resource; among the moved tasks, higher-priority movers go first (priority
// evaluated on `state`), and one mover's tasks keep index order.
GameState ApplyDeviation(const BudgetGame& game, const GameState& state,
                         const Deviation& deviation,
                         TieBreak rule = TieBreak::kFixed);

struct BestResponse {
  int strategy;
  Rational utility;
};

// Utility-maximizing strategy against the others' current choices, lowest
// strategy index on ties. The current strategy is one of the candidates.
BestResponse ComputeBestResponse(const BudgetGame& game, const GameState& state,
                                 PlayerIndex player);

// The best response, if it strictly improves on the current utility.
std::optional<BestResponse> ImprovingResponse(const BudgetGame& game,
                                              const GameState& state,
                                              PlayerIndex player);

enum class Scheduler { kRoundRobin, kLowestIdImprover, kSimultaneous };

std::string_view SchedulerName(Scheduler scheduler);

struct TraceStep {
  Deviation deviation;
  Rational welfare_before;
  Rational welfare_after;
  // Utilities after the step, listed in `priority_order`.
  std::vector<Rational> utilities;
  std::vector<PlayerIndex> priority_order;
};

enum class Terminal { kConverged, kStepCapReached };

struct DynamicsTrace {
  Variant variant = Variant::kStandard;
  TieBreak rule = TieBreak::kFixed;
  std::vector<Rational> initial_utilities;
  std::vector<PlayerIndex> initial_priority_order;
  std::vector<TraceStep> steps;
  Terminal terminal = Terminal::kConverged;
  GameState final_state;
};

// Called with the initial state and then with every state the dynamics visit.
using StateObserver = std::function<void(const GameState&)>;

// Improvement dynamics. Sequential schedulers move one improving player per
// step to its best response: kLowestIdImprover always picks the lowest player
// index, kRoundRobin scans cyclically starting after the previous mover.
// kSimultaneous moves every player that has an improving best response in
// the same step, merged by ApplyDeviation under `rule`.
DynamicsTrace RunDynamics(const BudgetGame& game, const GameState& initial,
                          Scheduler scheduler, TieBreak rule, int max_steps,
                          const StateObserver& observer = nullptr);

// True iff every step strictly increases the priority-sorted utility vector
// lexicographically. Only meaningful for ordered games; throws ModelError
// for traces of standard games.
bool LexicographicProgress(const DynamicsTrace& trace);

}  // namespace budget_games

#endif  // BUDGET_GAMES_DYNAMICS_H_
