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

#ifndef BUDGET_GAMES_OPTIMIZE_H_
#define BUDGET_GAMES_OPTIMIZE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "budget_games/game.h"
#include "budget_games/rational.h"

namespace budget_games {

struct Optimum {
  StrategyProfile profile;
  Rational welfare;
};

// Default cap on the number of profiles BruteForceOptimum will visit.
inline constexpr long long kDefaultOptimumProfiles = 1LL << 20;

// Exact welfare maximizer over all strategy profiles. Welfare does not depend
// on the order, so ordered games are scored on their task sets alone. The
// first maximal profile in enumeration order wins. Throws LimitExceeded when
// the profile space is larger than `max_profiles`.
Optimum BruteForceOptimum(const BudgetGame& game,
                          long long max_profiles = kDefaultOptimumProfiles);

// Strategy spaces that are bases of a uniform matroid per player: player i
// must play exactly limits[i] of its own tasks, and every such subset is a
// strategy.
struct MatroidSpec {
  std::vector<int> limits;
};

// Throws ModelError unless each player's strategy list is exactly the set of
// all limits[i]-subsets of its tasks.
void ValidateMatroidSpec(const BudgetGame& game, const MatroidSpec& spec);

// Greedy welfare maximization: repeatedly add the task with the largest
// marginal welfare gain among players with spare capacity (lowest task index
// on ties) until every player holds limits[i] tasks.
Optimum GreedyWelfare(const BudgetGame& game, const MatroidSpec& spec);

// A violated instance of g(X+u) - g(X) >= g(Y+u) - g(Y) with X a subset of Y,
// or of g(X) <= g(Y) when `monotonicity` is set.
struct SetFunctionCounterexample {
  std::vector<TaskIndex> smaller;
  std::vector<TaskIndex> larger;
  TaskIndex element = -1;
  bool monotonicity = false;
};

struct SubmodularityCheck {
  bool ok = true;
  bool exhaustive = false;
  std::optional<SetFunctionCounterexample> counterexample;
};

// Checks that welfare, as a function of the selected task set, is monotone
// and submodular. Exhaustive when there are at most 12 tasks; otherwise
// `sample_count` random chains X <= Y drawn from `seed`.
SubmodularityCheck CheckSubmodularMonotone(const BudgetGame& game,
                                           int sample_count,
                                           std::uint64_t seed);

}  // namespace budget_games

#endif  // BUDGET_GAMES_OPTIMIZE_H_
