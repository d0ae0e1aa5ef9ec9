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

#ifndef BUDGET_GAMES_GENERATORS_H_
#define BUDGET_GAMES_GENERATORS_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "budget_games/errors.h"
#include "budget_games/game.h"
#include "budget_games/rational.h"

namespace budget_games {

// ---------------------------------------------------------------------------
// Maximum coverage.

struct CoverageInstance {
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> sets;
  int w = 1;  // number of sets that may be picked
};

// w players share the same tasks, one per set; every element is a resource
// of budget 1 and a task demands 1 on each element of its set. Strategies are
// singletons, so the welfare of a profile is the number of covered elements.
BudgetGame GenerateMaxCoverage(const CoverageInstance& instance,
                               Variant variant = Variant::kStandard);

// Largest number of elements covered by at most w sets (exhaustive).
int MaxCoverage(const CoverageInstance& instance);

// ---------------------------------------------------------------------------
// Nash-existence gadget built from an exact-cover-by-3-sets instance.

struct X3CInstance {
  std::vector<std::string> universe;  // size 3m
  std::vector<std::array<std::string, 3>> triples;
};

bool ExactCoverExists(const X3CInstance& instance);

// Constants that steer player D. alpha and beta are D's share of the set
// resources when q - m and q - m + 1 set players stay out of the cover; gamma
// must lie strictly between them and delta above the switching threshold.
struct GadgetCalibration {
  Rational gamma;
  Rational delta;
  Rational alpha;
  Rational beta;
};

// How D's second task reaches the set players' second tasks: one resource
// per set (budget 8/3 each, D demands 8/3 on each) or a single shared
// resource of budget 8/3 * q.
enum class SetResourceWiring { kPerSet, kShared };

class CalibrationError : public Error {
 public:
  CalibrationError(const std::string& message, Rational alpha, Rational beta)
      : Error(message), alpha_(std::move(alpha)), beta_(std::move(beta)) {}
  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }

 private:
  Rational alpha_;
  Rational beta_;
};

struct NeGadget {
  BudgetGame game;
  GadgetCalibration calibration;
};

// Standard budget game with players s1..sq (one per triple), A, B, C and D.
// Without `calibration`, gamma = (alpha + beta) / 2 and delta is the smallest
// integer above the switching threshold. Either way the result is checked by
// brute force: D must prefer its second task exactly when at most q - m set
// players play their second task, and A, B, C must cycle while D plays its
// first task. Throws CalibrationError (carrying alpha and beta) otherwise.
NeGadget GenerateNeGadget(
    const X3CInstance& instance,
    std::optional<GadgetCalibration> calibration = {},
    SetResourceWiring wiring = SetResourceWiring::kPerSet);

// ---------------------------------------------------------------------------
// Price-of-anarchy families.

// Standard game with n + 1 players and two unit-budget resources: players
// 1..n choose between demand 1/(n+1) - eps on r1 and demand 1 on r2; player
// n+1 always demands 1 on r2. Requires n >= 1 and 0 < eps < 1/(n+1).
BudgetGame GenerateStandardPoAFamily(int n, const Rational& eps);

// `copies` disjoint ordered two-player games. In each, player 1 chooses
// between demand b on r1 (budget b) and demand b(1 - eps) on r2 (budget
// b(1 - eps)); player 2 always demands b on r1. Requires 0 < eps < 1, b > 0.
BudgetGame GenerateOrderedPoAFamily(const Rational& eps, const Rational& b,
                                    int copies);

// ---------------------------------------------------------------------------
// Monotone one-in-three 3SAT.

struct MonotoneFormula {
  std::vector<std::string> variables;
  std::vector<std::array<int, 3>> clauses;  // indices into `variables`
};

// Number of clauses each variable occurs in.
std::vector<int> OccurrenceCounts(const MonotoneFormula& formula);

// Some assignment sets exactly one variable per clause to true.
bool OneInThreeSatisfiable(const MonotoneFormula& formula);

// Ordered game with one player per variable (strategy 0 = false, 1 = true)
// and two resources per clause: budget 2 shared by the false tasks and
// budget 1 shared by the true tasks of the clause's variables.
BudgetGame GenerateOneInThree(const MonotoneFormula& formula);

// ---------------------------------------------------------------------------
// Exponentially long best-response dynamics.

struct ExponentialFamily {
  BudgetGame game;
  GameState initial;
  // Utility of every player in the all-ones equilibrium the dynamics reach.
  std::vector<Rational> equilibrium_utilities;
  // Players 1..n (without the auxiliary players), player 1 first.
  std::vector<PlayerIndex> base_players;
};

// Ordered game with 2n - 1 players (1..n and aux_2..aux_n), every strategy a
// single fully connected task. Players are listed, and prioritized, from
// aux_n, n, aux_{n-1}, n-1 down to 1; the initial state has everyone on
// strategy 0 and orders tasks the same way. Requires n >= 1.
ExponentialFamily GenerateExponentialFamily(int n);

// ---------------------------------------------------------------------------
// Cross-checks between a gadget and its source instance.

struct GadgetVerification {
  bool game_side = false;      // property measured on the game
  bool instance_side = false;  // property decided on the source instance
  bool consistent = false;
  std::string detail;
};

// Max profile welfare equals the max coverage, and every profile's welfare
// equals the number of elements its chosen sets cover.
GadgetVerification VerifyCoverageGadget(const CoverageInstance& instance,
                                        const BudgetGame& game);
// A Nash equilibrium exists iff the instance has an exact cover.
GadgetVerification VerifyNeGadget(const X3CInstance& instance,
                                  const BudgetGame& game);
// A super-strong equilibrium with welfare sum(k_i) exists iff the formula is
// one-in-three satisfiable.
GadgetVerification VerifyOneInThreeGadget(const MonotoneFormula& formula,
                                          const BudgetGame& game);

}  // namespace budget_games

#endif  // BUDGET_GAMES_GENERATORS_H_
