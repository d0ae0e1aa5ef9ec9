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

#include "budget_games/optimize.h"

#include <algorithm>
#include <random>
#include <string>

#include "budget_games/errors.h"
#include "budget_games/utility.h"

namespace budget_games {
namespace {

constexpr int kExhaustiveTaskLimit = 12;

// Advances `profile` like an odometer, last player fastest. Returns false
// after the final profile.
bool NextProfile(const BudgetGame& game, StrategyProfile& profile) {
  for (int i = game.num_players() - 1; i >= 0; --i) {
    if (++profile[i] < static_cast<int>(game.player(i).strategies.size())) {
      return true;
    }
    profile[i] = 0;
  }
  return false;
}

std::vector<TaskIndex> MaskToTasks(std::uint32_t mask, int num_tasks) {
  std::vector<TaskIndex> tasks;
  for (TaskIndex t = 0; t < num_tasks; ++t) {
    if (mask & (1u << t)) tasks.push_back(t);
  }
  return tasks;
}

std::vector<TaskIndex> FlagsToTasks(const std::vector<bool>& flags) {
  std::vector<TaskIndex> tasks;
  for (TaskIndex t = 0; t < static_cast<int>(flags.size()); ++t) {
    if (flags[t]) tasks.push_back(t);
  }
  return tasks;
}

// All k-subsets of `items`, each sorted.
void Subsets(const std::vector<TaskIndex>& items, int k, size_t from,
             std::vector<TaskIndex>& current,
             std::vector<std::vector<TaskIndex>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (size_t j = from; j < items.size(); ++j) {
    current.push_back(items[j]);
    Subsets(items, k, j + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

Optimum BruteForceOptimum(const BudgetGame& game, long long max_profiles) {
  const long long count = game.ProfileCount(max_profiles);
  if (count > max_profiles) {
    throw LimitExceeded("profile space exceeds the brute-force cap of " +
                        std::to_string(max_profiles));
  }
  StrategyProfile profile(game.num_players(), 0);
  Optimum best{profile, SelectionWelfare(game, SelectedTasks(game, profile))};
  while (NextProfile(game, profile)) {
    Rational welfare = SelectionWelfare(game, SelectedTasks(game, profile));
    if (welfare > best.welfare) best = {profile, std::move(welfare)};
  }
  return best;
}

void ValidateMatroidSpec(const BudgetGame& game, const MatroidSpec& spec) {
  if (static_cast<int>(spec.limits.size()) != game.num_players()) {
    throw ModelError("matroid spec must give one limit per player");
  }
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    const Player& p = game.player(i);
    const int k = spec.limits[i];
    if (k < 0 || k > static_cast<int>(p.tasks.size())) {
      throw ModelError("matroid limit of player '" + p.id + "' out of range");
    }
    std::vector<std::vector<TaskIndex>> expected;
    std::vector<TaskIndex> current;
    Subsets(p.tasks, k, 0, current, expected);
    std::vector<std::vector<TaskIndex>> actual = p.strategies;
    std::sort(expected.begin(), expected.end());
    std::sort(actual.begin(), actual.end());
    if (expected != actual) {
      throw ModelError("strategies of player '" + p.id + "' are not the " +
                       std::to_string(k) + "-subsets of its tasks");
    }
  }
}

Optimum GreedyWelfare(const BudgetGame& game, const MatroidSpec& spec) {
  ValidateMatroidSpec(game, spec);
  std::vector<bool> selected(game.num_tasks(), false);
  std::vector<int> remaining = spec.limits;
  Rational welfare = SelectionWelfare(game, selected);
  while (true) {
    TaskIndex best_task = -1;
    Rational best_value;
    for (TaskIndex t = 0; t < game.num_tasks(); ++t) {
      if (selected[t] || remaining[game.task(t).owner] == 0) continue;
      selected[t] = true;
      Rational value = SelectionWelfare(game, selected);
      selected[t] = false;
      if (best_task < 0 || value > best_value) {
        best_task = t;
        best_value = std::move(value);
      }
    }
    if (best_task < 0) break;
    selected[best_task] = true;
    --remaining[game.task(best_task).owner];
    welfare = best_value;
  }

  StrategyProfile profile(game.num_players(), 0);
  for (PlayerIndex i = 0; i < game.num_players(); ++i) {
    std::vector<TaskIndex> chosen;
    for (TaskIndex t : game.player(i).tasks) {
      if (selected[t]) chosen.push_back(t);
    }
    const auto& strategies = game.player(i).strategies;
    profile[i] = static_cast<int>(
        std::find(strategies.begin(), strategies.end(), chosen) -
        strategies.begin());
  }
  return {profile, welfare};
}

SubmodularityCheck CheckSubmodularMonotone(const BudgetGame& game,
                                           int sample_count,
                                           std::uint64_t seed) {
  const int n = game.num_tasks();
  SubmodularityCheck result;
  if (n <= kExhaustiveTaskLimit) {
    result.exhaustive = true;
    const std::uint32_t full = 1u << n;
    std::vector<Rational> value(full);
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      std::vector<bool> selected(n);
      for (int t = 0; t < n; ++t) selected[t] = (mask >> t) & 1u;
      value[mask] = SelectionWelfare(game, selected);
    }
    // Monotone and submodular iff every single addition is non-negative and
    // every pair of additions has diminishing returns.
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      for (int u = 0; u < n; ++u) {
        const std::uint32_t bu = 1u << u;
        if (mask & bu) continue;
        if (value[mask | bu] < value[mask]) {
          result.ok = false;
          result.counterexample = SetFunctionCounterexample{
              MaskToTasks(mask, n), MaskToTasks(mask | bu, n), u, true};
          return result;
        }
        for (int v = 0; v < n; ++v) {
          const std::uint32_t bv = 1u << v;
          if (v == u || (mask & bv)) continue;
          if (value[mask | bu] - value[mask] <
              value[mask | bu | bv] - value[mask | bv]) {
            result.ok = false;
            result.counterexample = SetFunctionCounterexample{
                MaskToTasks(mask, n), MaskToTasks(mask | bv, n), u, false};
            return result;
          }
        }
      }
    }
    return result;
  }

  std::mt19937_64 rng(seed);
  for (int sample = 0; sample < sample_count; ++sample) {
    std::vector<bool> larger(n), smaller(n);
    for (int t = 0; t < n; ++t) {
      larger[t] = rng() & 1u;
      smaller[t] = larger[t] && (rng() & 1u);
    }
    const Rational g_small = SelectionWelfare(game, smaller);
    const Rational g_large = SelectionWelfare(game, larger);
    if (g_small > g_large) {
      result.ok = false;
      result.counterexample = SetFunctionCounterexample{
          FlagsToTasks(smaller), FlagsToTasks(larger), -1, true};
      return result;
    }
    std::vector<TaskIndex> outside;
    for (int t = 0; t < n; ++t) {
      if (!larger[t]) outside.push_back(t);
    }
    if (outside.empty()) continue;
    const TaskIndex u = outside[rng() % outside.size()];
    smaller[u] = larger[u] = true;
    const Rational gain_small = SelectionWelfare(game, smaller) - g_small;
    const Rational gain_large = SelectionWelfare(game, larger) - g_large;
    smaller[u] = larger[u] = false;
    if (gain_small < gain_large) {
      result.ok = false;
      result.counterexample = SetFunctionCounterexample{
          FlagsToTasks(smaller), FlagsToTasks(larger), u, false};
      return result;
    }
  }
  return result;
}

}  // namespace budget_games
