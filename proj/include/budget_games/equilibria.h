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

#ifndef BUDGET_GAMES_EQUILIBRIA_H_
#define BUDGET_GAMES_EQUILIBRIA_H_

#include <optional>
#include <string_view>
#include <vector>

#include "budget_games/dynamics.h"
#include "budget_games/errors.h"
#include "budget_games/game.h"
#include "budget_games/rational.h"

namespace budget_games {

enum class EquilibriumKind { kNash, kStrong, kSuperStrong };

std::string_view EquilibriumKindName(EquilibriumKind kind);
std::optional<EquilibriumKind> ParseEquilibriumKind(std::string_view name);

// Caps on the brute-force routines. Exceeding one is a LimitExceeded error,
// never a silently truncated search.
struct EnumerationLimits {
  long long max_profiles = 4096;       // 12 bits of strategy profile
  int max_coalition_players = 7;       // coalition and insertion enumeration
  int max_exhaustive_order_tasks = 6;  // SearchMode::kAllOrders
  long long max_states = 1'000'000;
};

struct EquilibriumReport {
  EquilibriumKind kind = EquilibriumKind::kNash;
  GameState state;
  Rational welfare;
  // A profitable deviation; present exactly when the state is not an
  // equilibrium of `kind`.
  std::optional<Deviation> witness;

  bool holds() const { return !witness.has_value(); }
};

// Checks every player's every alternative strategy. The witness is the
// lowest-index player's best improving response.
EquilibriumReport CheckNash(const BudgetGame& game, const GameState& state);

// Enumerates all non-empty coalitions and all joint alternatives in which
// every member changes strategy. Strong: some coalition makes every member
// strictly better off. Super strong: every member weakly better off and at
// least one strictly. Coalition moves are ordered by `rule`.
EquilibriumReport CheckStrong(const BudgetGame& game, const GameState& state,
                              TieBreak rule = TieBreak::kFixed,
                              const EnumerationLimits& limits = {});
EquilibriumReport CheckSuperStrong(const BudgetGame& game,
                                   const GameState& state,
                                   TieBreak rule = TieBreak::kFixed,
                                   const EnumerationLimits& limits = {});
EquilibriumReport CheckEquilibrium(const BudgetGame& game,
                                   const GameState& state, EquilibriumKind kind,
                                   TieBreak rule = TieBreak::kFixed,
                                   const EnumerationLimits& limits = {});

// Inserts players one at a time in `insertion_order`; each picks a best
// response (lowest index on ties) against the players already inserted,
// whose tasks are served first. Ordered games only.
GameState SequentialInsertion(const BudgetGame& game,
                              const std::vector<PlayerIndex>& insertion_order);

enum class SearchMode {
  // Every profile; ordered games use the priority-implied order.
  kProfiles,
  // Every profile combined with every player insertion order, i.e. every
  // order a sequence of single-player moves can build.
  kProfilesTimesInsertions,
  // Every profile with every per-resource order of the selected tasks.
  // Limited to games with few tasks.
  kAllOrders,
};

std::string_view SearchModeName(SearchMode mode);
std::optional<SearchMode> ParseSearchMode(std::string_view name);

// All equilibria of `kind` found by the search, deduplicated by state and
// sorted by profile index (last player fastest), then by order.
std::vector<EquilibriumReport> EnumerateEquilibria(
    const BudgetGame& game, EquilibriumKind kind, SearchMode search,
    TieBreak rule = TieBreak::kFixed, const EnumerationLimits& limits = {});

// Optimal welfare against best and worst equilibrium welfare. A ratio whose
// denominator is zero (and numerator positive) is reported as nullopt,
// meaning infinite.
struct PoAReport {
  Rational opt_welfare;
  Rational best_eq_welfare;
  Rational worst_eq_welfare;
  std::optional<Rational> poa;
  std::optional<Rational> pos;
  long long eq_count = 0;
};

// Thrown by MeasurePoA when the search finds no equilibrium.
class NoEquilibrium : public Error {
 public:
  using Error::Error;
};

// Standard games search profiles; ordered games search profiles times
// insertion orders unless `search` overrides it.
PoAReport MeasurePoA(const BudgetGame& game, EquilibriumKind kind,
                     std::optional<SearchMode> search = std::nullopt,
                     TieBreak rule = TieBreak::kFixed,
                     const EnumerationLimits& limits = {});

}  // namespace budget_games

#endif  // BUDGET_GAMES_EQUILIBRIA_H_
