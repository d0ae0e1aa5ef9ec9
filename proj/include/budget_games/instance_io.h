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

#ifndef BUDGET_GAMES_INSTANCE_IO_H_
#define BUDGET_GAMES_INSTANCE_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "budget_games/dynamics.h"
#include "budget_games/game.h"
#include "budget_games/optimize.h"
#include "budget_games/rational.h"
#include "json.hpp"

namespace budget_games {

inline constexpr int kFormatVersion = 1;

// A parsed instance file.
//
//   {
//     "format_version": 1,
//     "variant": "standard" | "ordered",
//     "resources": [{"id": "r1", "budget": "8/3"}, ...],
//     "players": [{"id": "p1", "priority": 2,
//                  "tasks": [{"id": "t1", "demands": {"r1": "1"}}, ...],
//                  "strategies": [["t1"], ...]}, ...],
//     "initial_state": {"profile": {"p1": 0, ...},
//                       "order": {"r1": ["t1", ...], ...}},      optional
//     "matroid": {"kind": "per_player_cardinality",
//                 "limits": {"p1": 1, ...}}                     optional
//   }
//
// Rationals are strings in canonical form. "order" is only allowed for
// ordered games; when it is missing the state is block ordered by priority.
struct InstanceDocument {
  BudgetGame game;
  std::optional<GameState> initial_state;
  std::optional<MatroidSpec> matroid;
};

// Strict parser: unknown or duplicate fields are rejected. Syntax errors
// carry line and column; semantic errors carry a JSON pointer to the
// offending value. `source` names the input in messages.
InstanceDocument ParseInstance(std::string_view text,
                               const std::string& source = "");

// Canonical pretty-printed form, newline terminated.
std::string SerializeInstance(const BudgetGame& game,
                              const GameState* state = nullptr,
                              const MatroidSpec* matroid = nullptr);

// A standalone state file: the "initial_state" object of an instance.
GameState ParseState(const BudgetGame& game, std::string_view text,
                     const std::string& source = "");
nlohmann::ordered_json StateToJson(const BudgetGame& game,
                                   const GameState& state);

// Whole file or standard input for "-". Throws ParseError when unreadable.
std::string ReadTextFile(const std::string& path);

// Rational as {"value": "p/q", "approx": decimal}.
nlohmann::ordered_json RationalToJson(const Rational& value);

// One record per step: movers with their new strategies, welfare before and
// after, and every player's utility afterwards.
nlohmann::ordered_json TraceToJson(const BudgetGame& game,
                                   const DynamicsTrace& trace,
                                   Scheduler scheduler);

// ---------------------------------------------------------------------------
// Seeded random instances.

struct RandomSpec {
  std::uint64_t seed = 1;
  int n_players = 3;
  int n_resources = 3;
  int tasks_per_player = 2;
  // Distinct non-empty task subsets drawn per player. Ignored when
  // `cardinality` is set: strategies are then all k-subsets of the tasks.
  int strategies_per_player = 2;
  std::pair<Rational, Rational> demand_range{Rational(1), Rational(4)};
  std::pair<Rational, Rational> budget_range{Rational(1), Rational(6)};
  // Probability that a (task, resource) pair is connected.
  Rational density{1, 2};
  Variant variant = Variant::kOrdered;
  std::optional<int> cardinality;
  // Budgets and demands are drawn from `grid` + 1 evenly spaced points.
  int grid = 4;
};

struct RandomInstance {
  BudgetGame game;
  std::optional<MatroidSpec> matroid;  // set iff spec.cardinality is
};

// Deterministic for a fixed spec on every platform. Throws ModelError for
// infeasible specs.
RandomInstance GenerateRandom(const RandomSpec& spec);

}  // namespace budget_games

#endif  // BUDGET_GAMES_INSTANCE_IO_H_
