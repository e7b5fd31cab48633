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

#ifndef MICOLOR_PLAY_HPP_
#define MICOLOR_PLAY_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "micolor/game.hpp"
#include "micolor/matroid.hpp"
#include "micolor/strategy.hpp"

namespace micolor {

enum class AlicePolicy { kEngine, kNaive };
enum class BobPolicy { kRandom, kFirstFit, kAdversarial };

std::optional<AlicePolicy> parse_alice_policy(std::string_view text);
std::optional<BobPolicy> parse_bob_policy(std::string_view text);

struct GameConfig {
  std::vector<Matroid> matroids;
  Mode mode = Mode::kClassic;
  AlicePolicy alice = AlicePolicy::kEngine;
  BobPolicy bob = BobPolicy::kRandom;
  std::uint64_t seed = 0;
};

// Plays to the end and replay-checks the transcript before returning it.
Transcript run_game(const GameConfig& config);

// Drives a game between two policies from `state` to the end.
GameState play_out(GameState state, AliceStrategy& alice, BobStrategy& bob);

}  // namespace micolor

#endif  // MICOLOR_PLAY_HPP_
