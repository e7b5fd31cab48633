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

#include "micolor/game.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "micolor/errors.hpp"

namespace micolor {

std::string_view to_string(Mode mode) {
  return mode == Mode::kClassic ? "classic" : "modified";
}

std::string_view to_string(Role role) {
  return role == Role::kAlice ? "alice" : "bob";
}

std::optional<Mode> parse_mode(std::string_view text) {
  if (text == "classic") return Mode::kClassic;
  if (text == "modified") return Mode::kModified;
  return std::nullopt;
}

std::optional<Role> parse_role(std::string_view text) {
  if (text == "alice") return Role::kAlice;
  if (text == "bob") return Role::kBob;
  return std::nullopt;
}

int GameState::color_of(Element e) const {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].contains(e)) return static_cast<int>(i) + 1;
  }
  return 0;
}

Awaiting GameState::awaiting() const {
  if (winner_) return Awaiting::kFinished;
  if (mode_ == Mode::kModified && !pending_kind_) return Awaiting::kKind;
  if (!indicated_) return Awaiting::kIndication;
  return Awaiting::kColor;
}

Role GameState::indicator() const {
  if (mode_ == Mode::kModified && pending_kind_ == MoveKind::kBobIndicates) {
    return Role::kBob;
  }
  return Role::kAlice;
}

Role GameState::colorist() const {
  return indicator() == Role::kAlice ? Role::kBob : Role::kAlice;
}

GameState new_game(std::vector<Matroid> matroids, Mode mode) {
  const ElementSet ground = shared_ground_set(matroids);
  ElementSet colorable;
  for (const Matroid& m : matroids) colorable |= m.ground_set() - loops(m);
  if (colorable != ground) {
    throw ValidationError("uncolorable element " +
                          std::to_string((ground - colorable).min()) +
                          " is a loop in every matroid");
  }
  GameState s;
  s.mode_ = mode;
  s.ground_ = ground;
  s.classes_.assign(matroids.size(), ElementSet());
  PartitionResult result = partition_ground_set(matroids);
  if (auto* cover = std::get_if<Cover>(&result)) {
    s.feasible_ = true;
    s.initial_cover_ = std::move(*cover);
  }
  s.matroids_ = std::move(matroids);
  if (ground.empty()) s.winner_ = Role::kAlice;
  return s;
}

GameState new_game(const Matroid& m, int colors, Mode mode) {
  if (colors < 1) throw ValidationError("colors: must be at least 1");
  return new_game(std::vector<Matroid>(colors, m), mode);
}

std::vector<int> legal_colors(const GameState& state, Element e) {
  if (!state.ground_set().contains(e)) {
    throw ValidationError("element " + std::to_string(e) +
                          " is not in the ground set");
  }
  if (state.colored().contains(e)) {
    throw ValidationError("element " + std::to_string(e) +
                          " is already colored");
  }
  std::vector<int> out;
  for (int c = 1; c <= state.colors(); ++c) {
    if (state.matroids()[c - 1].is_independent(state.color_class(c).with(e))) {
      out.push_back(c);
    }
  }
  return out;
}

GameState choose_kind(const GameState& state, MoveKind kind) {
  if (state.awaiting() != Awaiting::kKind) {
    throw IllegalMove("move kind is not expected now", {});
  }
  GameState next = state;
  next.pending_kind_ = kind;
  return next;
}

GameState indicate(const GameState& state, Element e) {
  if (state.awaiting() != Awaiting::kIndication) {
    throw IllegalMove("indication is not expected now", {});
  }
  if (!state.uncolored().contains(e)) {
    throw IllegalMove("element " + std::to_string(e) +
                          " is not an uncolored element",
                      {});
  }
  GameState next = state;
  next.indicated_ = e;
  if (legal_colors(next, e).empty()) next.winner_ = Role::kBob;
  return next;
}

GameState apply(const GameState& state, Element e, int color) {
  if (state.awaiting() == Awaiting::kIndication) {
    GameState indicated = indicate(state, e);
    if (indicated.finished()) {
      throw IllegalMove("element " + std::to_string(e) + " has no legal color",
                        {});
    }
    return apply(indicated, e, color);
  }
  if (state.awaiting() != Awaiting::kColor) {
    throw IllegalMove("coloring is not expected now", {});
  }
  if (state.indicated() != e) {
    throw IllegalMove("element " + std::to_string(e) + " is not the indicated element",
                      legal_colors(state, *state.indicated()));
  }
  std::vector<int> legal = legal_colors(state, e);
  if (std::find(legal.begin(), legal.end(), color) == legal.end()) {
    throw IllegalMove("color " + std::to_string(color) +
                          " is not legal for element " + std::to_string(e),
                      std::move(legal));
  }
  GameState next = state;
  next.classes_[color - 1].insert(e);
  next.colored_.insert(e);
  next.rounds_.push_back(Round{static_cast<int>(state.rounds_.size()) + 1,
                              state.indicator(), e, state.colorist(), color});
  next.pending_kind_.reset();
  next.indicated_.reset();
  if (next.colored_ == next.ground_) next.winner_ = Role::kAlice;
  return next;
}

std::vector<Matroid> current_minors(const GameState& state) {
  std::vector<Matroid> out;
  out.reserve(state.matroids().size());
  const ElementSet uncolored = state.uncolored();
  for (int c = 1; c <= state.colors(); ++c) {
    out.push_back(state.matroids()[c - 1]
                      .contraction(state.color_class(c))
                      .restriction(uncolored));
  }
  return out;
}

Transcript make_transcript(const GameState& state) {
  if (!state.finished()) throw ValidationError("transcript: game is not finished");
  return Transcript{state.colors(), state.mode(), state.rounds(), *state.winner()};
}

GameState replay(std::vector<Matroid> matroids, const Transcript& transcript) {
  if (static_cast<int>(matroids.size()) != transcript.colors) {
    throw ValidationError("replay: transcript has " +
                          std::to_string(transcript.colors) + " colors but " +
                          std::to_string(matroids.size()) + " matroids given");
  }
  GameState state = new_game(std::move(matroids), transcript.mode);
  int expected_number = 1;
  for (const Round& r : transcript.rounds) {
    const std::string where = "replay: round " + std::to_string(r.number);
    if (r.number != expected_number++) throw ValidationError(where + ": out of sequence");
    if (r.indicator == r.colorist) {
      throw ValidationError(where + ": indicator and colorist coincide");
    }
    try {
      if (transcript.mode == Mode::kModified) {
        state = choose_kind(state, r.indicator == Role::kAlice
                                       ? MoveKind::kAliceIndicates
                                       : MoveKind::kBobIndicates);
      } else if (r.indicator != Role::kAlice) {
        throw ValidationError(where + ": only alice indicates in classic mode");
      }
      state = apply(state, r.element, r.color);
    } catch (const IllegalMove& ex) {
      throw ValidationError(where + ": " + ex.what());
    }
  }
  if (transcript.winner == Role::kAlice) {
    if (!state.finished()) throw ValidationError("replay: alice wins but elements remain uncolored");
    return state;
  }
  if (state.finished()) throw ValidationError("replay: bob wins but every element is colored");
  for (Element e : state.uncolored()) {
    if (!legal_colors(state, e).empty()) continue;
    if (state.mode() == Mode::kModified) {
      state = choose_kind(state, MoveKind::kAliceIndicates);
    }
    return indicate(state, e);
  }
  throw ValidationError("replay: bob wins but no uncolored element is stuck");
}

}  // namespace micolor
