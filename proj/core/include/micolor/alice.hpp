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

#ifndef MICOLOR_ALICE_HPP_
#define MICOLOR_ALICE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "micolor/game.hpp"
#include "micolor/strategy.hpp"
#include "micolor/union.hpp"

namespace micolor {

// Alice's bookkeeping for the tight-set strategy.
//
// The region stack replaces the recursion of the inductive argument: the
// top region is the subgame Alice is currently finishing. A tight region A
// is played out completely before the rest, after which the remainder is
// covered by the minors contracted by what was colored inside A.
struct AliceState {
  // Outermost first; strictly nested; every region is uncolored.
  std::vector<ElementSet> region_stack;
  // Cover of the uncolored elements for the current minors (modified mode).
  std::optional<Cover> witness;

  std::string key() const;
};

// Takes the witness from the game's initial cover in modified mode.
AliceState make_alice_state(const GameState& state);

// Prunes colored elements from the stack, then pushes proper tight subsets
// of the top region until none is left and returns the top region's
// smallest element. Throws InfeasibleError if the uncolored elements have
// no cover under the current minors.
Element alice_next_indication(AliceState& astate, const GameState& state);

// Updates after an accepted round. In modified mode a round colored by Bob
// refreshes the witness, and a round colored by Alice starts the indication
// strategy afresh on the remaining minors.
void alice_observe(AliceState& astate, const GameState& after,
                   const Round& round);

// The witness part holding e; removes e from the witness. Throws
// InvariantError if the witness is missing or the color is not legal.
int alice_choose_color(AliceState& astate, const GameState& state, Element e);

// witness <- partition of the current minors. Throws InvariantError if they
// have no cover.
void alice_refresh_witness(AliceState& astate, const GameState& state);

// Tight-set strategy. On a game without a cover it falls back to the
// naive policy.
std::unique_ptr<AliceStrategy> make_engine_alice(const GameState& initial);

// Indicates the smallest uncolored id and colors with the smallest legal
// color.
std::unique_ptr<AliceStrategy> make_naive_alice();

}  // namespace micolor

#endif  // MICOLOR_ALICE_HPP_
