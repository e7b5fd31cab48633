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

#ifndef MICOLOR_BOB_HPP_
#define MICOLOR_BOB_HPP_

#include <memory>
#include <random>

#include "micolor/game.hpp"
#include "micolor/strategy.hpp"

namespace micolor {

// Uniform over the legal colors. Precondition for all three: e has a legal
// color.
int bob_random(const GameState& state, Element e, std::mt19937_64& rng);
int bob_first_fit(const GameState& state, Element e);
// The smallest color after which Bob can still force a win against `alice`
// (searched exhaustively, within a state budget). Without a known policy
// the smallest color that makes the position lost under optimal Alice play.
// Otherwise, or past the budget or solver guards, the smallest legal color.
int bob_adversarial(const GameState& state, Element e,
                    const AliceStrategy* alice);

// Random kind, indication and color.
std::unique_ptr<BobStrategy> make_random_bob(std::uint64_t seed);
// Always lets Alice indicate; smallest element and color when asked.
std::unique_ptr<BobStrategy> make_first_fit_bob();
// Plays a winning line against `alice` whenever one exists. `alice` is the
// live opponent and must outlive the returned strategy; it may be null.
std::unique_ptr<BobStrategy> make_adversarial_bob(const AliceStrategy* alice);

}  // namespace micolor

#endif  // MICOLOR_BOB_HPP_
