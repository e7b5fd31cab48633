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

#ifndef MICOLOR_GAME_HPP_
#define MICOLOR_GAME_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "micolor/element_set.hpp"
#include "micolor/matroid.hpp"
#include "micolor/union.hpp"

namespace micolor {

enum class Mode { kClassic, kModified };
enum class Role { kAlice, kBob };

// Kind 1: Alice indicates, Bob colors. Kind 2: Bob indicates, Alice colors.
// Classic games only play kind 1.
enum class MoveKind { kAliceIndicates = 1, kBobIndicates = 2 };

// What the referee waits for next.
enum class Awaiting { kKind, kIndication, kColor, kFinished };

std::string_view to_string(Mode mode);
std::string_view to_string(Role role);
std::optional<Mode> parse_mode(std::string_view text);
std::optional<Role> parse_role(std::string_view text);

struct Round {
  int number = 0;
  Role indicator = Role::kAlice;
  Element element = 0;
  Role colorist = Role::kBob;
  int color = 0;
  bool operator==(const Round&) const = default;
};

struct Transcript {
  int colors = 0;
  Mode mode = Mode::kClassic;
  std::vector<Round> rounds;
  Role winner = Role::kAlice;
  bool operator==(const Transcript&) const = default;
};

// Referee state of a generalized game: color i (1-based) classes must stay
// independent in matroids[i-1]. Every transition returns a new value and
// leaves the source untouched.
class GameState {
 public:
  const std::vector<Matroid>& matroids() const { return matroids_; }
  int colors() const { return static_cast<int>(matroids_.size()); }
  Mode mode() const { return mode_; }
  ElementSet ground_set() const { return ground_; }
  ElementSet colored() const { return colored_; }
  ElementSet uncolored() const { return ground_ - colored_; }
  // 0 when uncolored.
  int color_of(Element e) const;
  // Elements of color c (1-based).
  ElementSet color_class(int color) const { return classes_[color - 1]; }
  const std::vector<Round>& rounds() const { return rounds_; }

  // Whether a cover of the ground set existed at creation.
  bool feasible() const { return feasible_; }
  const std::optional<Cover>& initial_cover() const { return initial_cover_; }

  Awaiting awaiting() const;
  bool finished() const { return winner_.has_value(); }
  std::optional<Role> winner() const { return winner_; }
  std::optional<MoveKind> pending_kind() const { return pending_kind_; }
  std::optional<Element> indicated() const { return indicated_; }
  Role indicator() const;
  Role colorist() const;

 private:
  friend GameState new_game(std::vector<Matroid> matroids, Mode mode);
  friend GameState choose_kind(const GameState& state, MoveKind kind);
  friend GameState indicate(const GameState& state, Element e);
  friend GameState apply(const GameState& state, Element e, int color);

  std::vector<Matroid> matroids_;
  Mode mode_ = Mode::kClassic;
  ElementSet ground_;
  ElementSet colored_;
  std::vector<ElementSet> classes_;
  std::vector<Round> rounds_;
  bool feasible_ = false;
  std::optional<Cover> initial_cover_;
  std::optional<MoveKind> pending_kind_;
  std::optional<Element> indicated_;
  std::optional<Role> winner_;
};

// Throws ValidationError on mismatched ground sets or on an element that is
// a loop in every matroid ("uncolorable element").
GameState new_game(std::vector<Matroid> matroids, Mode mode);

// k copies of m.
GameState new_game(const Matroid& m, int colors, Mode mode);

// Colors c with class_c | {e} independent, ascending. Throws
// ValidationError if e is invalid or already colored.
std::vector<int> legal_colors(const GameState& state, Element e);

// Modified mode only: Bob's choice of move kind for the coming round.
GameState choose_kind(const GameState& state, MoveKind kind);

// Records the indication. If e has no legal color the colorist is stuck and
// Bob wins. Throws IllegalMove when out of turn or e is not uncolored.
GameState indicate(const GameState& state, Element e);

// Colors the indicated element. Without a prior indication (classic, or
// modified after a kind choice) e is taken as indicated by the current
// indicator. Throws IllegalMove, carrying the legal colors, on a bad color.
GameState apply(const GameState& state, Element e, int color);

// Mi contracted by its color class and restricted to the uncolored set.
std::vector<Matroid> current_minors(const GameState& state);

Transcript make_transcript(const GameState& state);

// Replays the rounds through the referee and checks the recorded winner.
// Throws ValidationError on any inconsistency.
GameState replay(std::vector<Matroid> matroids, const Transcript& transcript);

}  // namespace micolor

#endif  // MICOLOR_GAME_HPP_
