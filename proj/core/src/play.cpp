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

#include "micolor/play.hpp"

#include <memory>

#include "micolor/alice.hpp"
#include "micolor/bob.hpp"
#include "micolor/errors.hpp"

namespace micolor {

std::optional<AlicePolicy> parse_alice_policy(std::string_view text) {
  if (text == "engine") return AlicePolicy::kEngine;
  if (text == "naive") return AlicePolicy::kNaive;
  return std::nullopt;
}

std::optional<BobPolicy> parse_bob_policy(std::string_view text) {
  if (text == "random") return BobPolicy::kRandom;
  if (text == "first-fit") return BobPolicy::kFirstFit;
  if (text == "adversarial") return BobPolicy::kAdversarial;
  return std::nullopt;
}

GameState play_out(GameState state, AliceStrategy& alice, BobStrategy& bob) {
  while (!state.finished()) {
    switch (state.awaiting()) {
      case Awaiting::kKind:
        state = choose_kind(state, bob.choose_kind(state));
        break;
      case Awaiting::kIndication: {
        const Element e = state.indicator() == Role::kAlice
                              ? alice.indicate(state)
                              : bob.indicate(state);
        state = indicate(state, e);
        break;
      }
      case Awaiting::kColor: {
        const Element e = *state.indicated();
        const int c = state.colorist() == Role::kAlice ? alice.color(state, e)
                                                       : bob.color(state, e);
        state = apply(state, e, c);
        alice.observe(state, state.rounds().back());
        break;
      }
      case Awaiting::kFinished:
        break;
    }
  }
  return state;
}

Transcript run_game(const GameConfig& config) {
  GameState state = new_game(config.matroids, config.mode);
  std::unique_ptr<AliceStrategy> alice = config.alice == AlicePolicy::kEngine
                                             ? make_engine_alice(state)
                                             : make_naive_alice();
  std::unique_ptr<BobStrategy> bob;
  switch (config.bob) {
    case BobPolicy::kRandom:
      bob = make_random_bob(config.seed);
      break;
    case BobPolicy::kFirstFit:
      bob = make_first_fit_bob();
      break;
    case BobPolicy::kAdversarial:
      bob = make_adversarial_bob(alice.get());
      break;
  }
  const GameState final_state = play_out(std::move(state), *alice, *bob);
  Transcript transcript = make_transcript(final_state);
  replay(config.matroids, transcript);
  return transcript;
}

}  // namespace micolor
