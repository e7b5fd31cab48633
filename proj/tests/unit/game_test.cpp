// Copyright 2026 The Authors.
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

#include <vector>

#include "doctest.h"
#include "micolor/errors.hpp"
#include "micolor/game.hpp"
#include "support/fixtures.hpp"

namespace micolor {
namespace {

using testing::copies;

// K4 element ids: 0 = 1-3, 1 = 3-2, 2 = 1-4, 3 = 4-2, 4 = 1-2, 5 = 3-4.

TEST_CASE("new_game examples") {
  GameState u12 = new_game(copies(Matroid::uniform(2, 1), 2), Mode::kClassic);
  CHECK(u12.feasible());
  CHECK(u12.awaiting() == Awaiting::kIndication);
  CHECK(u12.uncolored() == ElementSet{0, 1});

  GameState u13 = new_game(Matroid::uniform(3, 1), 1, Mode::kClassic);
  CHECK_FALSE(u13.feasible());
  CHECK_FALSE(u13.initial_cover().has_value());

  GameState k4 = new_game(copies(testing::k4(), 2), Mode::kModified);
  CHECK(k4.feasible());
  CHECK(k4.awaiting() == Awaiting::kKind);

  CHECK_THROWS_WITH_AS(new_game(Matroid::uniform(2, 0), 2, Mode::kClassic),
                       "uncolorable element 0 is a loop in every matroid", ValidationError);
  std::vector<Matroid> mismatched{Matroid::uniform(2, 1), Matroid::uniform(3, 1)};
  CHECK_THROWS_AS(new_game(mismatched, Mode::kClassic), ValidationError);
  // A loop in one matroid only is still colorable.
  std::vector<Matroid> partial{Matroid::partition(2, {{0, {0}}, {1, {1}}}),
                               Matroid::uniform(2, 2)};
  CHECK_NOTHROW(new_game(partial, Mode::kClassic));
}

TEST_CASE("legal_colors examples") {
  GameState s = new_game(copies(Matroid::uniform(2, 1), 2), Mode::kClassic);
  CHECK(legal_colors(s, 1) == std::vector<int>{1, 2});
  s = apply(s, 0, 1);
  CHECK(legal_colors(s, 1) == std::vector<int>{2});
  CHECK_THROWS_AS(legal_colors(s, 0), ValidationError);
  CHECK_THROWS_AS(legal_colors(s, 9), ValidationError);

  GameState k = new_game(copies(testing::k4(), 2), Mode::kClassic);
  k = apply(k, 0, 1);
  k = apply(k, 1, 1);
  k = apply(k, 2, 2);
  k = apply(k, 3, 2);
  CHECK(legal_colors(k, 4).empty());
  CHECK(legal_colors(k, 5) == std::vector<int>{1, 2});
}

TEST_CASE("apply examples") {
  GameState s = new_game(copies(Matroid::uniform(2, 1), 2), Mode::kClassic);
  s = apply(s, 0, 1);
  CHECK_FALSE(s.finished());
  GameState before = s;
  try {
    apply(s, 1, 1);
    FAIL("illegal color accepted");
  } catch (const IllegalMove& e) {
    CHECK(e.legal_colors() == std::vector<int>{2});
  }
  CHECK(s.colored() == before.colored());
  s = apply(s, 1, 2);
  CHECK(s.finished());
  CHECK(s.winner() == Role::kAlice);
  CHECK(s.rounds().size() == 2);
  CHECK(s.rounds()[1] == Round{2, Role::kAlice, 1, Role::kBob, 2});
  CHECK_THROWS_AS(apply(s, 1, 2), IllegalMove);
}

TEST_CASE("indicating a dead element hands Bob the win") {
  GameState s = new_game(copies(Matroid::uniform(2, 1), 1), Mode::kClassic);
  s = apply(s, 0, 1);
  s = indicate(s, 1);
  CHECK(s.finished());
  CHECK(s.winner() == Role::kBob);
  CHECK(s.awaiting() == Awaiting::kFinished);
}

TEST_CASE("modified rounds follow the chosen kind") {
  GameState s = new_game(copies(Matroid::uniform(2, 1), 2), Mode::kModified);
  CHECK_THROWS_AS(indicate(s, 0), IllegalMove);
  s = choose_kind(s, MoveKind::kBobIndicates);
  CHECK(s.indicator() == Role::kBob);
  CHECK(s.colorist() == Role::kAlice);
  CHECK_THROWS_AS(choose_kind(s, MoveKind::kBobIndicates), IllegalMove);
  s = indicate(s, 1);
  CHECK(s.awaiting() == Awaiting::kColor);
  CHECK_THROWS_AS(apply(s, 0, 1), IllegalMove);
  s = apply(s, 1, 1);
  CHECK(s.rounds().back() == Round{1, Role::kBob, 1, Role::kAlice, 1});
  CHECK(s.awaiting() == Awaiting::kKind);
}

TEST_CASE("current minors contract each class and restrict to the rest") {
  GameState s = new_game(copies(Matroid::uniform(2, 1), 2), Mode::kClassic);
  s = apply(s, 0, 1);
  auto minors = current_minors(s);
  REQUIRE(minors.size() == 2);
  CHECK(minors[0].ground_set() == ElementSet{1});
  CHECK(minors[0].rank({1}) == 0);
  CHECK(minors[1].rank({1}) == 1);

  GameState k = new_game(copies(testing::k4(), 2), Mode::kClassic);
  k = apply(k, 4, 1);
  auto km = current_minors(k);
  CHECK(km[0].full_rank() == 2);
  CHECK(km[1].full_rank() == 3);
}

TEST_CASE("replay reproduces the final state and rejects tampering") {
  auto ms = copies(testing::k4(), 2);
  GameState s = new_game(ms, Mode::kClassic);
  for (auto [e, c] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}, {2, 2}, {3, 2}}) {
    s = apply(s, e, c);
  }
  s = indicate(s, 4);
  Transcript t = make_transcript(s);
  CHECK(t.winner == Role::kBob);
  GameState r = replay(ms, t);
  CHECK(r.winner() == Role::kBob);
  CHECK(r.colored() == s.colored());

  Transcript wrong_winner = t;
  wrong_winner.winner = Role::kAlice;
  CHECK_THROWS_AS(replay(ms, wrong_winner), ValidationError);
  Transcript bad_color = t;
  bad_color.rounds[1].color = 3;
  CHECK_THROWS_AS(replay(ms, bad_color), ValidationError);
  Transcript gap = t;
  gap.rounds[2].number = 7;
  CHECK_THROWS_AS(replay(ms, gap), ValidationError);
  Transcript repeated = t;
  repeated.rounds[1].element = 0;
  CHECK_THROWS_AS(replay(ms, repeated), ValidationError);
  Transcript bob_indicates = t;
  bob_indicates.rounds[0].indicator = Role::kBob;
  bob_indicates.rounds[0].colorist = Role::kAlice;
  CHECK_THROWS_AS(replay(ms, bob_indicates), ValidationError);
  CHECK_THROWS_AS(replay(copies(testing::k4(), 3), t), ValidationError);
}

}  // namespace
}  // namespace micolor
