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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "budget_games/dynamics.h"
#include "budget_games/equilibria.h"
#include "budget_games/errors.h"
#include "budget_games/game.h"
#include "budget_games/generators.h"
#include "budget_games/instance_io.h"
#include "budget_games/optimize.h"
#include "budget_games/utility.h"

namespace bg = budget_games;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void Fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Shared bookkeeping for the cross-cutting criteria 10 and 11.
struct Ledger {
  long long states_checked = 0;
  long long violations = 0;
  std::string first_violation;

  long long ordered_equilibria = 0;
  long long poa_breaches = 0;
  std::string first_breach;

  void Visit(const bg::BudgetGame& game, const bg::GameState& state,
             const std::string& where) {
    ++states_checked;
    const auto found = bg::CheckValidity(game, state);
    if (found.empty()) return;
    if (violations == 0) {
      first_violation = where + ": resource " +
                        game.resource(found[0].resource).id + " allocates " +
                        found[0].allocated.ToString() + " > " +
                        found[0].budget.ToString();
    }
    ++violations;
  }

  // Records an ordered-game equilibrium against the game's optimum.
  void Equilibrium(const bg::Rational& opt, const bg::Rational& welfare,
                   const std::string& where) {
    ++ordered_equilibria;
    if (opt <= bg::Rational(2) * welfare) return;
    if (poa_breaches == 0) {
      first_breach = where + ": opt " + opt.ToString() + ", equilibrium " +
                     welfare.ToString();
    }
    ++poa_breaches;
  }
};

Ledger ledger;

std::vector<bg::StrategyProfile> AllProfiles(const bg::BudgetGame& game) {
  std::vector<bg::StrategyProfile> out;
  bg::StrategyProfile profile(game.num_players(), 0);
  while (true) {
    out.push_back(profile);
    int i = game.num_players() - 1;
    for (; i >= 0; --i) {
      if (++profile[i] < static_cast<int>(game.player(i).strategies.size())) {
        break;
      }
      profile[i] = 0;
    }
    if (i < 0) return out;
  }
}

void VisitAllProfiles(const bg::BudgetGame& game, const std::string& where) {
  for (const bg::StrategyProfile& p : AllProfiles(game)) {
    ledger.Visit(game, bg::MakeState(game, p), where);
  }
}

// Every permutation of the players, lexicographic.
std::vector<std::vector<bg::PlayerIndex>> AllInsertionOrders(int n) {
  std::vector<bg::PlayerIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<bg::PlayerIndex>> out;
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// A small random ordered game whose shape is drawn from `seed` as well.
bg::BudgetGame RandomOrderedGame(std::uint64_t seed, int max_players) {
  std::mt19937_64 shape(seed * 0x9E3779B97F4A7C15ULL + 17);
  bg::RandomSpec spec;
  spec.seed = seed;
  spec.variant = bg::Variant::kOrdered;
  spec.n_players = 2 + static_cast<int>(shape() % (max_players - 1));
  spec.n_resources = 2 + static_cast<int>(shape() % 3);
  spec.tasks_per_player = 2 + static_cast<int>(shape() % 2);
  const int subsets = (1 << spec.tasks_per_player) - 1;
  spec.strategies_per_player =
      std::min(subsets, 2 + static_cast<int>(shape() % 3));
  spec.density = bg::Rational(1 + static_cast<int>(shape() % 3), 4);
  spec.budget_range = {bg::Rational(2), bg::Rational(10)};
  return bg::GenerateRandom(spec).game;
}

// Random profile with players' task blocks in a random order.
bg::GameState RandomState(const bg::BudgetGame& game, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  bg::StrategyProfile profile(game.num_players());
  for (bg::PlayerIndex i = 0; i < game.num_players(); ++i) {
    profile[i] = static_cast<int>(rng() % game.player(i).strategies.size());
  }
  std::vector<bg::PlayerIndex> order(game.num_players());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return bg::MakeBlockOrderedState(game, std::move(profile), order);
}

std::string Str(const bg::Rational& value) { return value.ToString(); }

// ---------------------------------------------------------------------------

Verdict OrderedPoAFamily() {
  Verdict v;
  const bg::BudgetGame game =
      bg::GenerateOrderedPoAFamily(bg::Rational(1, 10), bg::Rational(1), 1);
  VisitAllProfiles(game, "ord-poa");
  const bg::PoAReport report = bg::MeasurePoA(game, bg::EquilibriumKind::kNash);
  if (report.opt_welfare != bg::Rational(19, 10)) {
    v.Fail("opt " + Str(report.opt_welfare));
  }
  // Worst welfare over every sequential insertion.
  bg::Rational worst_sequential = report.opt_welfare;
  for (const auto& order : AllInsertionOrders(game.num_players())) {
    const bg::GameState s = bg::SequentialInsertion(game, order);
    ledger.Visit(game, s, "ord-poa insertion");
    worst_sequential = bg::Min(worst_sequential, bg::SocialWelfare(game, s));
  }
  if (worst_sequential != bg::Rational(1)) {
    v.Fail("worst sequential welfare " + Str(worst_sequential));
  }
  if (report.worst_eq_welfare != bg::Rational(1)) {
    v.Fail("worst equilibrium " + Str(report.worst_eq_welfare));
  }
  if (!report.poa || *report.poa != bg::Rational(19, 10) ||
      *report.poa != bg::Rational(2) - bg::Rational(1, 10)) {
    v.Fail("poa not 19/10");
  }
  if (!report.pos || *report.pos != bg::Rational(1)) v.Fail("pos not 1");
  for (const auto& eq :
       bg::EnumerateEquilibria(game, bg::EquilibriumKind::kNash,
                               bg::SearchMode::kProfilesTimesInsertions)) {
    ledger.Visit(game, eq.state, "ord-poa equilibrium");
    ledger.Equilibrium(report.opt_welfare, eq.welfare, "ord-poa");
  }
  if (v.pass) {
    v.detail = "opt 19/10, worst NE 1, PoA " + Str(*report.poa) + ", PoS " +
               Str(*report.pos);
  }
  return v;
}

Verdict StandardPoAFamily() {
  Verdict v;
  const int n = 4;
  const bg::BudgetGame game =
      bg::GenerateStandardPoAFamily(n, bg::Rational(1, 100));
  VisitAllProfiles(game, "std-poa");
  const bg::Optimum opt = bg::BruteForceOptimum(game);
  if (opt.welfare != bg::Rational(44, 25)) v.Fail("opt " + Str(opt.welfare));
  const auto eqs = bg::EnumerateEquilibria(game, bg::EquilibriumKind::kNash,
                                           bg::SearchMode::kProfiles);
  bg::StrategyProfile expected(n + 1, 1);
  expected[n] = 0;
  if (eqs.size() != 1 || eqs[0].state.profile != expected) {
    v.Fail(std::to_string(eqs.size()) + " equilibria, expected only r2 one");
  } else if (eqs[0].welfare != bg::Rational(1)) {
    v.Fail("equilibrium welfare " + Str(eqs[0].welfare));
  }
  const bg::PoAReport report = bg::MeasurePoA(game, bg::EquilibriumKind::kNash);
  if (!report.poa || *report.poa != bg::Rational(44, 25) ||
      !(*report.poa < bg::Rational(2))) {
    v.Fail("poa mismatch");
  }
  if (v.pass) v.detail = "opt 44/25, unique NE welfare 1, PoA 44/25";
  return v;
}

// Least-squares polynomial fit; returns the largest relative residual.
double PolyFitResidual(const std::vector<double>& x,
                       const std::vector<double>& y, int degree) {
  const int m = degree + 1;
  std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
  for (size_t k = 0; k < x.size(); ++k) {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) a[i][j] += std::pow(x[k], i + j);
      a[i][m] += std::pow(x[k], i) * y[k];
    }
  }
  for (int c = 0; c < m; ++c) {
    int pivot = c;
    for (int r = c + 1; r < m; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
    }
    std::swap(a[c], a[pivot]);
    for (int r = 0; r < m; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (int j = c; j <= m; ++j) a[r][j] -= f * a[c][j];
    }
  }
  double worst = 0.0;
  for (size_t k = 0; k < x.size(); ++k) {
    double fit = 0.0;
    for (int i = 0; i < m; ++i) fit += a[i][m] / a[i][i] * std::pow(x[k], i);
    worst = std::max(worst, std::abs(fit - y[k]) / y[k]);
  }
  return worst;
}

Verdict ExponentialFamily() {
  Verdict v;
  std::vector<double> ns, sizes;
  std::ostringstream steps;
  for (int n = 1; n <= 8; ++n) {
    const bg::ExponentialFamily family = bg::GenerateExponentialFamily(n);
    const std::string where = "expo n=" + std::to_string(n);
    const bg::DynamicsTrace trace = bg::RunDynamics(
        family.game, family.initial, bg::Scheduler::kLowestIdImprover,
        bg::TieBreak::kFixed, 1 << 24,
        [&](const bg::GameState& s) { ledger.Visit(family.game, s, where); });
    const size_t bound = (size_t{1} << n) - 1;
    if (trace.terminal != bg::Terminal::kConverged) v.Fail(where + " capped");
    if (trace.steps.size() < bound) {
      v.Fail(where + ": " + std::to_string(trace.steps.size()) + " steps");
    }
    if (!bg::CheckNash(family.game, trace.final_state).holds()) {
      v.Fail(where + ": terminal state is not Nash");
    }
    steps << (n > 1 ? "," : "") << trace.steps.size();
    ns.push_back(n);
    sizes.push_back(
        static_cast<double>(bg::SerializeInstance(family.game).size()));
  }
  // Degree-4 least squares on the encoding size; an exponential would leave
  // large residuals.
  const double residual = PolyFitResidual(ns, sizes, 4);
  if (residual > 0.02) {
    v.Fail("encoding size fit residual " + std::to_string(residual));
  }
  if (v.pass) {
    std::ostringstream d;
    d << "steps " << steps.str() << "; size " << sizes.front() << ".."
      << sizes.back() << " bytes, degree-4 fit residual "
      << std::to_string(residual);
    v.detail = d.str();
  }
  return v;
}

Verdict PotentialProperty() {
  Verdict v;
  const int games = 1000;
  long long total_steps = 0;
  for (int seed = 1; seed <= games; ++seed) {
    const bg::BudgetGame game = RandomOrderedGame(seed, 4);
    const std::string where = "potential seed " + std::to_string(seed);
    const bg::Scheduler scheduler = seed % 2 ? bg::Scheduler::kRoundRobin
                                             : bg::Scheduler::kLowestIdImprover;
    const bg::DynamicsTrace trace = bg::RunDynamics(
        game, RandomState(game, seed), scheduler, bg::TieBreak::kFixed, 100000,
        [&](const bg::GameState& s) { ledger.Visit(game, s, where); });
    total_steps += static_cast<long long>(trace.steps.size());
    for (const bg::TraceStep& step : trace.steps) {
      if (!(step.welfare_after > step.welfare_before)) {
        v.Fail(where + ": welfare did not increase");
      }
    }
    if (trace.terminal != bg::Terminal::kConverged) v.Fail(where + " capped");
    if (!bg::CheckNash(game, trace.final_state).holds()) {
      v.Fail(where + ": final state is not Nash");
    }
    ledger.Equilibrium(bg::BruteForceOptimum(game).welfare,
                       bg::SocialWelfare(game, trace.final_state), where);
  }
  if (v.pass) {
    v.detail = std::to_string(games) + " games, " +
               std::to_string(total_steps) + " strictly improving steps";
  }
  return v;
}

Verdict TieBreakConvergence() {
  Verdict v;
  const int games = 200;
  long long traces = 0;
  long long steps = 0;
  for (int seed = 1; seed <= games; ++seed) {
    const bg::BudgetGame game = RandomOrderedGame(10000 + seed, 4);
    const bg::Rational opt = bg::BruteForceOptimum(game).welfare;
    for (bg::TieBreak rule :
         {bg::TieBreak::kFixed, bg::TieBreak::kMaxUtility}) {
      const std::string where = "simultaneous seed " + std::to_string(seed) +
                                " " + std::string(bg::TieBreakName(rule));
      const bg::DynamicsTrace trace = bg::RunDynamics(
          game, RandomState(game, seed), bg::Scheduler::kSimultaneous, rule,
          100000,
          [&](const bg::GameState& s) { ledger.Visit(game, s, where); });
      ++traces;
      steps += static_cast<long long>(trace.steps.size());
      if (trace.terminal != bg::Terminal::kConverged) v.Fail(where + " capped");
      if (!bg::LexicographicProgress(trace)) {
        v.Fail(where + ": no lexicographic progress");
      }
      ledger.Equilibrium(opt, bg::SocialWelfare(game, trace.final_state),
                         where);
    }
  }
  if (v.pass) {
    v.detail = std::to_string(traces) + " traces, " + std::to_string(steps) +
               " steps, all converged with lexicographic progress";
  }
  return v;
}

Verdict SequentialInsertionIsStrong() {
  Verdict v;
  const int games = 100;
  long long enumerated = 0;
  for (int seed = 1; seed <= games; ++seed) {
    const bg::BudgetGame game = RandomOrderedGame(20000 + seed, 5);
    const std::string where = "insertion seed " + std::to_string(seed);
    std::vector<bg::PlayerIndex> order(game.num_players());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), std::mt19937_64(seed));
    const bg::GameState state = bg::SequentialInsertion(game, order);
    ledger.Visit(game, state, where);
    if (!bg::CheckStrong(game, state).holds()) {
      v.Fail(where + ": insertion result is not strong");
    }
    const bg::Rational opt = bg::BruteForceOptimum(game).welfare;
    ledger.Equilibrium(opt, bg::SocialWelfare(game, state), where);
    // Full enumeration on the smaller games feeds criterion 11.
    if (game.num_players() <= 3) {
      for (const auto& eq :
           bg::EnumerateEquilibria(game, bg::EquilibriumKind::kNash,
                                   bg::SearchMode::kProfilesTimesInsertions)) {
        ledger.Visit(game, eq.state, where);
        ledger.Equilibrium(opt, eq.welfare, where);
        ++enumerated;
      }
    }
  }
  if (v.pass) {
    v.detail = std::to_string(games) +
               " insertion outcomes strong under full coalition search; " +
               std::to_string(enumerated) + " equilibria enumerated";
  }
  return v;
}

Verdict NashExistenceGadget() {
  Verdict v;
  const bg::X3CInstance yes{{"a", "b", "c"}, {{"a", "b", "c"}}};
  const bg::X3CInstance no{{"a", "b", "c", "d", "e", "f"},
                           {{"a", "b", "c"}, {"a", "d", "e"}}};
  std::string calibration;
  for (const bg::X3CInstance* inst : {&yes, &no}) {
    const bool cover = bg::ExactCoverExists(*inst);
    try {
      const bg::NeGadget gadget = bg::GenerateNeGadget(*inst);
      VisitAllProfiles(gadget.game, "x3c-ne");
      const bool has_ne =
          !bg::EnumerateEquilibria(gadget.game, bg::EquilibriumKind::kNash,
                                   bg::SearchMode::kProfiles)
               .empty();
      if (has_ne != cover) {
        v.Fail(std::string(cover ? "yes" : "no") + "-instance " +
               (has_ne ? "has" : "lacks") + " a Nash equilibrium");
      }
      calibration = "gamma " + Str(gadget.calibration.gamma) + ", delta " +
                    Str(gadget.calibration.delta);
    } catch (const bg::CalibrationError& e) {
      v.Fail("BLOCKED by calibration ambiguity: calibration failed, alpha " +
             Str(e.alpha()) + ", beta " + Str(e.beta()));
    }
  }
  if (v.pass) {
    v.detail = "NE for the yes-instance only (" + calibration + ")";
  }
  return v;
}

Verdict OneInThree() {
  Verdict v;
  const bg::MonotoneFormula sat{{"x1", "x2", "x3"}, {{0, 1, 2}}};
  const bg::BudgetGame game = bg::GenerateOneInThree(sat);
  VisitAllProfiles(game, "one-in-three sat");
  const bg::GameState induced = bg::MakeState(game, {1, 0, 0});
  const bg::Rational welfare = bg::SocialWelfare(game, induced);
  if (welfare != bg::Rational(3)) v.Fail("induced welfare " + Str(welfare));
  if (!bg::CheckSuperStrong(game, induced).holds()) {
    v.Fail("induced profile is not super strong");
  }

  const bg::MonotoneFormula unsat{{"x1", "x2", "x3", "x4"},
                                  {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  if (bg::OneInThreeSatisfiable(unsat)) v.Fail("formula is satisfiable");
  const bg::BudgetGame hard = bg::GenerateOneInThree(unsat);
  bg::Rational target;
  for (int k : bg::OccurrenceCounts(unsat)) target += bg::Rational(k);
  bg::Rational best;
  for (const bg::StrategyProfile& p : AllProfiles(hard)) {
    const bg::GameState s = bg::MakeState(hard, p);
    ledger.Visit(hard, s, "one-in-three unsat");
    best = bg::Max(best, bg::SocialWelfare(hard, s));
  }
  if (best >= target) v.Fail("a profile reaches " + Str(target));
  if (v.pass) {
    v.detail = "satisfiable: welfare 3, super strong; unsatisfiable: best " +
               Str(best) + " < " + Str(target);
  }
  return v;
}

Verdict GreedyGuarantee() {
  Verdict v;
  const int instances = 200;
  const bg::Rational bound(6321, 10000);
  int exhaustive = 0;
  bg::Rational worst_ratio(1);
  for (int seed = 1; seed <= instances; ++seed) {
    std::mt19937_64 shape(seed);
    bg::RandomSpec spec;
    spec.seed = 30000 + seed;
    spec.variant = seed % 2 ? bg::Variant::kOrdered : bg::Variant::kStandard;
    spec.n_players = 2 + static_cast<int>(shape() % 2);
    spec.n_resources = 2 + static_cast<int>(shape() % 3);
    spec.tasks_per_player = 2 + static_cast<int>(shape() % 2);
    spec.cardinality = 1 + static_cast<int>(shape() % 2);
    spec.density = bg::Rational(1 + static_cast<int>(shape() % 3), 4);
    const bg::RandomInstance inst = bg::GenerateRandom(spec);
    const std::string where = "greedy seed " + std::to_string(seed);
    const bg::Optimum opt = bg::BruteForceOptimum(inst.game);
    const bg::Optimum greedy = bg::GreedyWelfare(inst.game, *inst.matroid);
    ledger.Visit(inst.game, bg::MakeState(inst.game, opt.profile), where);
    ledger.Visit(inst.game, bg::MakeState(inst.game, greedy.profile), where);
    if (greedy.welfare < bound * opt.welfare) {
      v.Fail(where + ": greedy " + Str(greedy.welfare) + " vs opt " +
             Str(opt.welfare));
    }
    if (opt.welfare.Sign() > 0) {
      worst_ratio = bg::Min(worst_ratio, greedy.welfare / opt.welfare);
    }
    if (inst.game.num_tasks() <= 6) {
      const bg::SubmodularityCheck check =
          bg::CheckSubmodularMonotone(inst.game, 0, seed);
      ++exhaustive;
      if (!check.exhaustive) v.Fail(where + ": check was not exhaustive");
      if (!check.ok) v.Fail(where + ": welfare not submodular and monotone");
    }
  }
  if (v.pass) {
    v.detail = std::to_string(instances) + " instances, worst greedy/opt " +
               Str(worst_ratio) + "; " + std::to_string(exhaustive) +
               " exhaustive submodularity checks";
  }
  return v;
}

Verdict Validity() {
  Verdict v;
  if (ledger.violations > 0) {
    v.Fail(std::to_string(ledger.violations) + " violations, first " +
           ledger.first_violation);
  } else {
    v.detail = std::to_string(ledger.states_checked) + " states, no violations";
  }
  return v;
}

Verdict PoAUpperBound() {
  Verdict v;
  if (ledger.ordered_equilibria == 0) v.Fail("no equilibria recorded");
  if (ledger.poa_breaches > 0) {
    v.Fail(std::to_string(ledger.poa_breaches) + " breaches, first " +
           ledger.first_breach);
  }
  if (v.pass) {
    v.detail = std::to_string(ledger.ordered_equilibria) +
               " ordered equilibria with opt/welfare <= 2";
  }
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Verdict (*run)();
  };
  const std::array<Criterion, 11> criteria = {{
      {"ordered PoA family", OrderedPoAFamily},
      {"standard PoA family", StandardPoAFamily},
      {"exponential dynamics", ExponentialFamily},
      {"potential property", PotentialProperty},
      {"tie-break convergence", TieBreakConvergence},
      {"sequential insertion", SequentialInsertionIsStrong},
      {"Nash existence gadget", NashExistenceGadget},
      {"one-in-three gadget", OneInThree},
      {"greedy guarantee", GreedyGuarantee},
      {"validity invariant", Validity},
      {"PoA upper bound", PoAUpperBound},
  }};
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].run();
    } catch (const std::exception& e) {
      v.Fail(std::string("exception: ") + e.what());
    }
    if (!v.pass) ++failed;
    std::printf("criterion %2zu %-24s %s  %s\n", i + 1, criteria[i].name,
                v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
