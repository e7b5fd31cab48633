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

#ifndef MICOLOR_STRATEGY_HPP_
#define MICOLOR_STRATEGY_HPP_

#include <memory>
#include <string>

#include "micolor/game.hpp"

namespace micolor {

// A player policy for Alice. Strategies may keep private state between
// rounds, so tree searches clone them before branching.
class AliceStrategy {
 public:
  virtual ~AliceStrategy() = default;
  virtual std::unique_ptr<AliceStrategy> clone() const = 0;

  // Alice is the indicator; returns an uncolored element.
  virtual Element indicate(const GameState& state) = 0;
  // Alice is the colorist of the indicated element e. Returns 0 if she has
  // nothing legal to offer.
  virtual int color(const GameState& state, Element e) = 0;
  // Called after every accepted round with the resulting state.
  virtual void observe(const GameState& after, const Round& round) = 0;

  // Distinguishes internal states for memoized searches.
  virtual std::string state_key() const = 0;
};

class BobStrategy {
 public:
  virtual ~BobStrategy() = default;

  // Modified mode only.
  virtual MoveKind choose_kind(const GameState& state) = 0;
  // Bob is the indicator (modified mode, kind 2).
  virtual Element indicate(const GameState& state) = 0;
  // Bob colors the indicated element; it has at least one legal color.
  virtual int color(const GameState& state, Element e) = 0;
};

}  // namespace micolor

#endif  // MICOLOR_STRATEGY_HPP_
