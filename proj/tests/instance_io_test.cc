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

#include "budget_games/instance_io.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <string>

#include "budget_games/errors.h"
#include "budget_games/generators.h"
#include "budget_games/utility.h"

namespace budget_games {
namespace {

// Structural equality, independent of the serializer.
void ExpectSameGame(const BudgetGame& a, const BudgetGame& b) {
  ASSERT_EQ(a.variant(), b.variant());
  ASSERT_EQ(a.num_resources(), b.num_resources());
  ASSERT_EQ(a.num_tasks(), b.num_tasks());
  ASSERT_EQ(a.num_players(), b.num_players());
  for (ResourceIndex r = 0; r < a.num_resources(); ++r) {
    EXPECT_EQ(a.resource(r).id, b.resource(r).id);
    EXPECT_EQ(a.resource(r).budget, b.resource(r).budget);
  }
  for (TaskIndex t = 0; t < a.num_tasks(); ++t) {
    EXPECT_EQ(a.task(t).id, b.task(t).id);
    EXPECT_EQ(a.task(t).owner, b.task(t).owner);
    for (ResourceIndex r = 0; r < a.num_resources(); ++r) {
      EXPECT_EQ(a.demand(t, r), b.demand(t, r));
    }
  }
  for (PlayerIndex i = 0; i < a.num_players(); ++i) {
    EXPECT_EQ(a.player(i).id, b.player(i).id);
    EXPECT_EQ(a.player(i).priority, b.player(i).priority);
    EXPECT_EQ(a.player(i).strategies, b.player(i).strategies);
  }
}

std::string ErrorOf(const std::string& text) {
  try {
    ParseInstance(text, "doc");
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

constexpr char kSmall[] = R"({
  "format_version": 1,
  "variant": "ordered",
  "resources": [{"id": "r1", "budget": "1"}],
  "players": [
    {"id": "p1", "priority": 1,
     "tasks": [{"id": "t1", "demands": {"r1": "2992/3"}}],
     "strategies": [["t1"], []]}
  ]
})";

TEST(InstanceIoTest, OrderedFamilyRoundTrips) {
  const BudgetGame game =
      GenerateOrderedPoAFamily(Rational(1, 10), Rational(1), 1);
  const std::string text = SerializeInstance(game);
  const InstanceDocument doc = ParseInstance(text);
  ExpectSameGame(game, doc.game);
  EXPECT_FALSE(doc.initial_state.has_value());
  EXPECT_EQ(SerializeInstance(doc.game), text);
}

TEST(InstanceIoTest, StateAndMatroidRoundTrip) {
  RandomSpec spec;
  spec.seed = 11;
  spec.tasks_per_player = 3;
  spec.cardinality = 2;
  const RandomInstance inst = GenerateRandom(spec);
  GameState state = MakeBlockOrderedState(inst.game, {1, 2, 0}, {2, 0, 1});
  const std::string text = SerializeInstance(inst.game, &state, &*inst.matroid);
  const InstanceDocument doc = ParseInstance(text);
  ExpectSameGame(inst.game, doc.game);
  ASSERT_TRUE(doc.initial_state.has_value());
  EXPECT_EQ(*doc.initial_state, state);
  ASSERT_TRUE(doc.matroid.has_value());
  EXPECT_EQ(doc.matroid->limits, inst.matroid->limits);
}

TEST(InstanceIoTest, RationalStringIsExact) {
  const InstanceDocument doc = ParseInstance(kSmall);
  EXPECT_EQ(doc.game.demand(0, 0), Rational(2992, 3));
  EXPECT_EQ(doc.game.demand(0, 0).ToString(), "2992/3");
}

TEST(InstanceIoTest, DuplicateResourceIdIsNamed) {
  std::string text = kSmall;
  text.replace(text.find(R"({"id": "r1", "budget": "1"})"), 27,
               R"({"id": "r1", "budget": "1"}, {"id": "r1", "budget": "2"})");
  const std::string message = ErrorOf(text);
  EXPECT_NE(message.find("r1"), std::string::npos) << message;
  EXPECT_NE(message.find("/resources/1"), std::string::npos) << message;
}

TEST(InstanceIoTest, SemanticErrorsCarryPaths) {
  struct Case {
    std::string from, to, path;
  };
  const Case cases[] = {
      {R"("2992/3")", R"("5984/6")", "/players/0/tasks/0/demands/r1"},
      {R"("2992/3")", R"("+3")", "/players/0/tasks/0/demands/r1"},
      {R"("2992/3")", "3", "/players/0/tasks/0/demands/r1"},
      {R"({"r1": )", R"({"r9": )", "/players/0/tasks/0/demands/r9"},
      {R"(["t1"], [])", R"(["t1"], ["t7"])", "/players/0/strategies/1/0"},
      {R"("format_version": 1)", R"("format_version": 2)", "/format_version"},
      {R"("ordered")", R"("fancy")", "/variant"},
      {R"("priority": 1,)", R"("priority": 1, "colour": 3,)", "/players/0"},
  };
  for (const Case& c : cases) {
    std::string text = kSmall;
    text.replace(text.find(c.from), c.from.size(), c.to);
    const std::string message = ErrorOf(text);
    EXPECT_NE(message.find(c.path), std::string::npos)
        << c.to << " -> " << message;
  }
}

TEST(InstanceIoTest, UnknownTopLevelFieldIsRejected) {
  std::string text = kSmall;
  text.insert(1, R"("comment": "x",)");
  EXPECT_NE(ErrorOf(text).find("comment"), std::string::npos);
}

TEST(InstanceIoTest, DuplicateJsonKeyIsRejected) {
  std::string text = kSmall;
  text.insert(1, R"("variant": "standard",)");
  EXPECT_NE(ErrorOf(text), "");
}

TEST(InstanceIoTest, SyntaxErrorHasLineAndColumn) {
  std::string text = kSmall;
  text.replace(text.find("\"budget\": \"1\""), 13, "\"budget\" \"1\"");
  const std::string message = ErrorOf(text);
  EXPECT_NE(message.find("doc:4:"), std::string::npos) << message;
  EXPECT_NE(message.find("syntax error"), std::string::npos) << message;
}

TEST(InstanceIoTest, StateValidation) {
  const InstanceDocument doc = ParseInstance(kSmall);
  const GameState state = ParseState(
      doc.game, R"({"profile": {"p1": 1}, "order": {"r1": ["t1"]}})");
  EXPECT_EQ(state.profile, (StrategyProfile{1}));
  EXPECT_THROW(ParseState(doc.game, R"({"profile": {}})"), Error);
  EXPECT_THROW(ParseState(doc.game, R"({"profile": {"p1": 2}})"), Error);
  EXPECT_THROW(
      ParseState(doc.game, R"({"profile": {"p1": 0}, "order": {"r1": []}})"),
      Error);
}

TEST(InstanceIoTest, OrderIsRejectedForStandardGames) {
  const BudgetGame game = GenerateStandardPoAFamily(1, Rational(1, 100));
  EXPECT_THROW(ParseState(game, R"({"profile": {"p1": 0, "p2": 0},
                                    "order": {"r1": []}})"),
               Error);
}

TEST(RandomInstanceTest, SameSeedSameText) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    RandomSpec spec;
    spec.seed = seed;
    EXPECT_EQ(SerializeInstance(GenerateRandom(spec).game),
              SerializeInstance(GenerateRandom(spec).game));
  }
  RandomSpec a, b;
  b.seed = 2;
  EXPECT_NE(SerializeInstance(GenerateRandom(a).game),
            SerializeInstance(GenerateRandom(b).game));
}

TEST(RandomInstanceTest, ZeroDensityMeansNoUtility) {
  RandomSpec spec;
  spec.density = Rational(0);
  spec.seed = 5;
  const BudgetGame game = GenerateRandom(spec).game;
  for (ResourceIndex r = 0; r < game.num_resources(); ++r) {
    EXPECT_TRUE(game.connections(r).empty());
  }
  StrategyProfile profile(game.num_players(), 1);
  for (Rational u : PlayerUtilities(game, MakeState(game, profile))) {
    EXPECT_EQ(u, Rational(0));
  }
}

TEST(RandomInstanceTest, ValuesStayOnTheGrid) {
  RandomSpec spec;
  spec.seed = 3;
  spec.n_players = 4;
  spec.n_resources = 5;
  spec.demand_range = {Rational(1, 2), Rational(3, 2)};
  spec.budget_range = {Rational(2), Rational(4)};
  const BudgetGame game = GenerateRandom(spec).game;
  for (const Resource& r : game.resources()) {
    const Rational step = (r.budget - Rational(2)) * Rational(2);
    EXPECT_TRUE(step.IsInteger()) << r.budget;
    EXPECT_GE(r.budget, Rational(2));
    EXPECT_LE(r.budget, Rational(4));
  }
  for (const Task& t : game.tasks()) {
    for (const Demand& d : t.demands) {
      EXPECT_TRUE(((d.amount - Rational(1, 2)) * Rational(4)).IsInteger());
      EXPECT_LE(d.amount, Rational(3, 2));
    }
  }
}

TEST(RandomInstanceTest, InfeasibleSpecsAreRejected) {
  RandomSpec spec;
  spec.tasks_per_player = 2;
  spec.strategies_per_player = 4;  // only 3 non-empty subsets
  EXPECT_THROW(GenerateRandom(spec), ModelError);
  spec = RandomSpec{};
  spec.demand_range = {Rational(3), Rational(1)};
  EXPECT_THROW(GenerateRandom(spec), ModelError);
  spec = RandomSpec{};
  spec.density = Rational(3, 2);
  EXPECT_THROW(GenerateRandom(spec), ModelError);
  spec = RandomSpec{};
  spec.cardinality = 5;
  EXPECT_THROW(GenerateRandom(spec), ModelError);
}

TEST(GoldenTest, EveryGoldenFileRoundTrips) {
  int count = 0;
  for (const auto& entry :
       std::filesystem::directory_iterator(BUDGET_GAMES_GOLDEN_DIR)) {
    if (entry.path().extension() != ".json") continue;
    ++count;
    const std::string text = ReadTextFile(entry.path().string());
    const InstanceDocument doc = ParseInstance(text, entry.path().string());
    const std::string again = SerializeInstance(
        doc.game, doc.initial_state ? &*doc.initial_state : nullptr,
        doc.matroid ? &*doc.matroid : nullptr);
    EXPECT_EQ(again, text) << entry.path();
  }
  EXPECT_GE(count, 7);
}

}  // namespace
}  // namespace budget_games
