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

#include "budget_games/dynamics.h"

#include <algorithm>
#include <string>

#include "budget_games/errors.h"
#include "budget_games/utility.h"

namespace budget_games {
namespace {

std::vector<Rational> InOrder(const std::vector<Rational>& utilities,
                              const std::vector<PlayerIndex>& order) {
  std::vector<Rational> sorted;
  sorted.reserve(order.size());
  for (PlayerIndex i : order) sorted.push_back(utilities[i]);
  return sorted;
}

std::vector<PlayerIndex> PriorityOrderFrom(
    const BudgetGame& game, const std::vector<Rational>& utilities,
    TieBreak rule) {
  std::vector<PlayerIndex> order = game.players_by_priority();
  if (rule == TieBreak::kMaxUtility) {
    std::stable_sort(order.begin(), order.end(),
                     [&](PlayerIndex a, PlayerIndex b) {
                       return utilities[a] > utilities[b];
                     });
  }
  return order;
}

}  // namespace

std::string_view TieBreakName(TieBreak rule) {
  return rule == TieBreak::kFixed ? "fix" : "max";
}

std::string_view SchedulerName(Scheduler scheduler) {
  switch (scheduler) {
    case Scheduler::kRoundRobin:
      return "round_robin";
    case Scheduler::kLowestIdImprover:
      return "lowest_id";
    case Scheduler::kSimultaneous:
      return "simultaneous";
  }
  return "";
}

std::vector<PlayerIndex> PriorityOrder(const BudgetGame& game,
                                       const GameState& state, TieBreak rule) {
  if (rule == TieBreak::kFixed) return game.players_by_priority();
  return PriorityOrderFrom(game, PlayerUtilities(game, state), rule);
}

GameState ApplyDeviation(const BudgetGame& game, const GameState& state,
                         const Deviation& deviation, TieBreak rule) {
  if (deviation.moves.empty()) throw ModelError("deviation has no movers");
  std::vector<bool> moving(game.num_players(), false);
  bool changes = false;
  for (const Move& m : deviation.moves) {
    if (m.player < 0 || m.player >= game.num_players()) {
      throw ModelError("deviation names an unknown player");
    }
    if (moving[m.player]) {
      throw ModelError("player '" + game.player(m.player).id +
                       "' appears twice in a deviation");
    }
    moving[m.player] = true;
    const int count = static_cast<int>(game.player(m.player).strategies.size());
    if (m.strategy < 0 || m.strategy >= count) {
      throw ModelError("strategy index " + std::to_string(m.strategy) +
                       " out of range for player '" + game.player(m.player).id +
                       "'");
    }
    if (m.strategy != state.profile.at(m.player)) changes = true;
  }
  if (!changes) throw ModelError("deviation changes no strategy");

  GameState next = state;
  for (const Move& m : deviation.moves) next.profile[m.player] = m.strategy;
  if (game.variant() == Variant::kStandard) return next;

  // Newly selected tasks, grouped by mover in priority order.
  const std::vector<PlayerIndex> priority =
      deviation.moves.size() == 1
          ? std::vector<PlayerIndex>{deviation.moves.front().player}
          : PriorityOrder(game, state, rule);
  std::vector<bool> moved(game.num_tasks(), false);
  std::vector<TaskIndex> appended;
  for (PlayerIndex i : priority) {
    if (!moving[i]) continue;
    const Strategy& before = game.player(i).strategies[state.profile[i]];
    const Strategy& after = game.player(i).strategies[next.profile[i]];
    for (TaskIndex t : after) {
      if (!std::binary_search(before.begin(), before.end(), t)) {
        moved[t] = true;
        appended.push_back(t);
      }
    }
  }
  if (appended.empty()) return next;
  for (auto& order : next.order) {
    std::erase_if(order, [&](TaskIndex t) { return moved[t]; });
    order.insert(order.end(), appended.begin(), appended.end());
  }
  return next;
}

BestResponse ComputeBestResponse(const BudgetGame& game, const GameState& state,
                                 PlayerIndex player) {
  if (player < 0 || player >= game.num_players()) {
    throw ModelError("unknown player index " + std::to_string(player));
  }
  const int current = state.profile.at(player);
  const int count = static_cast<int>(game.player(player).strategies.size());
  BestResponse best{-1, Rational(0)};
  for (int k = 0; k < count; ++k) {
    const Rational value =
        k == current
            ? PlayerUtility(game, state, player)
            : PlayerUtility(
                  game,
                  ApplyDeviation(game, state, Deviation::Single(player, k)),
                  player);
    if (best.strategy < 0 || value > best.utility) best = {k, value};
  }
  return best;
}

std::optional<BestResponse> ImprovingResponse(const BudgetGame& game,
                                              const GameState& state,
                                              PlayerIndex player) {
  BestResponse best = ComputeBestResponse(game, state, player);
  if (best.utility > PlayerUtility(game, state, player)) return best;
  return std::nullopt;
}

DynamicsTrace RunDynamics(const BudgetGame& game, const GameState& initial,
                          Scheduler scheduler, TieBreak rule, int max_steps,
                          const StateObserver& observer) {
  if (max_steps < 0) throw ModelError("max_steps must be non-negative");
  ValidateState(game, initial);

  DynamicsTrace trace;
  trace.variant = game.variant();
  trace.rule = rule;
  GameState state = initial;
  std::vector<Rational> utilities = PlayerUtilities(game, state);
  trace.initial_priority_order = PriorityOrderFrom(game, utilities, rule);
  trace.initial_utilities = InOrder(utilities, trace.initial_priority_order);
  if (observer) observer(state);

  PlayerIndex next_in_cycle = 0;
  while (true) {
    Deviation deviation;
    const int n = game.num_players();
    if (scheduler == Scheduler::kSimultaneous) {
      for (PlayerIndex i = 0; i < n; ++i) {
        if (auto br = ImprovingResponse(game, state, i)) {
          deviation.moves.push_back({i, br->strategy});
        }
      }
    } else {
      const PlayerIndex start =
          scheduler == Scheduler::kRoundRobin ? next_in_cycle : 0;
      for (int k = 0; k < n; ++k) {
        const PlayerIndex i = (start + k) % n;
        if (auto br = ImprovingResponse(game, state, i)) {
          deviation.moves.push_back({i, br->strategy});
          next_in_cycle = (i + 1) % n;
          break;
        }
      }
    }
    if (deviation.moves.empty()) {
      trace.terminal = Terminal::kConverged;
      break;
    }
    if (static_cast<int>(trace.steps.size()) >= max_steps) {
      trace.terminal = Terminal::kStepCapReached;
      break;
    }

    TraceStep step;
    step.welfare_before = Rational(0);
    for (const Rational& u : utilities) step.welfare_before += u;
    state = ApplyDeviation(game, state, deviation, rule);
    utilities = PlayerUtilities(game, state);
    step.deviation = std::move(deviation);
    step.welfare_after = Rational(0);
    for (const Rational& u : utilities) step.welfare_after += u;
    step.priority_order = PriorityOrderFrom(game, utilities, rule);
    step.utilities = InOrder(utilities, step.priority_order);
    trace.steps.push_back(std::move(step));
    if (observer) observer(state);
  }
  trace.final_state = std::move(state);
  return trace;
}

bool LexicographicProgress(const DynamicsTrace& trace) {
  if (trace.variant != Variant::kOrdered) {
    throw ModelError(
        "lexicographic progress is only guaranteed for ordered games");
  }
  const std::vector<Rational>* previous = &trace.initial_utilities;
  for (const TraceStep& step : trace.steps) {
    if (!std::lexicographical_compare(previous->begin(), previous->end(),
                                      step.utilities.begin(),
                                      step.utilities.end())) {
      return false;
    }
    previous = &step.utilities;
  }
  return true;
}

}  // namespace budget_games
