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

#ifndef BUDGET_GAMES_UTILITY_H_
#define BUDGET_GAMES_UTILITY_H_

#include <vector>

#include "budget_games/game.h"
#include "budget_games/rational.h"

namespace budget_games {

// Share of one resource received by one selected task.
struct TaskShare {
  TaskIndex task;
  Rational amount;
};

// Splits the budget of `r` among the selected tasks connected to it.
//
// Standard rule: every task receives min(t(r), b_r * t(r) / D) where D is the
// total selected demand on r. Ordered rule: tasks are served in `order`, each
// receiving min(t(r), max(0, b_r - demand of selected predecessors)).
// `order` is ignored (and may be null) for standard games. Shares come back
// sorted by task index.
std::vector<TaskShare> AllocateResource(const BudgetGame& game, ResourceIndex r,
                                        const std::vector<bool>& selected,
                                        const std::vector<TaskIndex>* order);
std::vector<TaskShare> AllocateResource(const BudgetGame& game,
                                        const GameState& state,
                                        ResourceIndex r);

// u_{t,r}(s). Require the matching variant and a selected task.
Rational StandardTaskUtility(const BudgetGame& game, const GameState& state,
                             TaskIndex task, ResourceIndex resource);
Rational OrderedTaskUtility(const BudgetGame& game, const GameState& state,
                            TaskIndex task, ResourceIndex resource);
// Dispatches on the game variant.
Rational TaskUtility(const BudgetGame& game, const GameState& state,
                     TaskIndex task, ResourceIndex resource);

Rational PlayerUtility(const BudgetGame& game, const GameState& state,
                       PlayerIndex player);
std::vector<Rational> PlayerUtilities(const BudgetGame& game,
                                      const GameState& state);
Rational SocialWelfare(const BudgetGame& game, const GameState& state);

// Welfare of an arbitrary set of selected tasks, independent of any profile.
// Ordered games are evaluated with tasks served in index order.
Rational SelectionWelfare(const BudgetGame& game,
                          const std::vector<bool>& selected);

struct ValidityViolation {
  ResourceIndex resource;
  Rational allocated;
  Rational budget;
};

// Resources whose allocated utility exceeds their budget. Empty for every
// well-formed state; anything else is a bug in the sharing rules.
std::vector<ValidityViolation> CheckValidity(const BudgetGame& game,
                                             const GameState& state);

}  // namespace budget_games

#endif  // BUDGET_GAMES_UTILITY_H_
