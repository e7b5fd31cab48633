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

#include "micolor/alice.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "micolor/errors.hpp"

namespace micolor {

namespace {

std::vector<Matroid> restrict_all(const std::vector<Matroid>& matroids,
                                  ElementSet region) {
  std::vector<Matroid> out;
  out.reserve(matroids.size());
  for (const Matroid& m : matroids) out.push_back(m.restriction(region));
  return out;
}

void prune(AliceState& astate, ElementSet uncolored) {
  auto& stack = astate.region_stack;
  for (ElementSet& region : stack) region &= uncolored;
  std::erase_if(stack, [](ElementSet r) { return r.empty(); });
}

int smallest_legal(const GameState& state, Element e) {
  std::vector<int> legal = legal_colors(state, e);
  return legal.empty() ? 0 : legal.front();
}

}  // namespace

std::string AliceState::key() const {
  std::string out;
  for (ElementSet r : region_stack) out += std::to_string(r.mask()) + "/";
  if (witness) {
    out += "w";
    for (ElementSet p : witness->parts) out += std::to_string(p.mask()) + ",";
  }
  return out;
}

AliceState make_alice_state(const GameState& state) {
  AliceState astate;
  if (state.mode() == Mode::kModified) astate.witness = state.initial_cover();
  return astate;
}

Element alice_next_indication(AliceState& astate, const GameState& state) {
  const ElementSet uncolored = state.uncolored();
  if (uncolored.empty()) throw ValidationError("no uncolored element to indicate");
  const std::vector<Matroid> minors = current_minors(state);
  if (std::holds_alternative<Violator>(partition_ground_set(minors))) {
    throw InfeasibleError("uncolored elements have no cover; no strategy applies");
  }
  prune(astate, uncolored);
  if (astate.region_stack.empty()) astate.region_stack.push_back(uncolored);

  while (true) {
    const ElementSet top = astate.region_stack.back();
    if (top.size() == 1) break;
    const std::vector<Matroid> local = restrict_all(minors, top);
    PartitionResult result = partition_ground_set(local);
    const Cover* cover = std::get_if<Cover>(&result);
    if (cover == nullptr) {
      throw InvariantError("region " + top.to_string() + " lost its cover");
    }
    std::optional<ElementSet> tight = find_proper_tight_set(local, *cover);
    if (!tight) break;
    astate.region_stack.push_back(*tight);
  }
  return astate.region_stack.back().min();
}

void alice_observe(AliceState& astate, const GameState& after,
                   const Round& round) {
  prune(astate, after.uncolored());
  if (after.mode() != Mode::kModified) return;
  if (round.colorist == Role::kAlice) {
    astate.region_stack.clear();
  } else if (astate.witness) {
    alice_refresh_witness(astate, after);
  }
}

int alice_choose_color(AliceState& astate, const GameState& state, Element e) {
  if (!astate.witness) throw InvariantError("alice_choose_color: no witness");
  const int color = astate.witness->color_of(e);
  if (color == 0) {
    throw InvariantError("alice_choose_color: element " + std::to_string(e) +
                         " is not covered by the witness");
  }
  const std::vector<int> legal = legal_colors(state, e);
  if (std::find(legal.begin(), legal.end(), color) == legal.end()) {
    throw InvariantError("alice_choose_color: witness color " +
                         std::to_string(color) + " is not legal");
  }
  astate.witness->parts[color - 1].erase(e);
  return color;
}

void alice_refresh_witness(AliceState& astate, const GameState& state) {
  PartitionResult result = partition_ground_set(current_minors(state));
  if (auto* violator = std::get_if<Violator>(&result)) {
    throw InvariantError("alice_refresh_witness: current minors have violator " +
                         violator->set.to_string());
  }
  astate.witness = std::get<Cover>(std::move(result));
}

namespace {

class EngineAlice final : public AliceStrategy {
 public:
  explicit EngineAlice(AliceState astate) : astate_(std::move(astate)) {}

  std::unique_ptr<AliceStrategy> clone() const override {
    return std::make_unique<EngineAlice>(*this);
  }

  Element indicate(const GameState& state) override {
    try {
      return alice_next_indication(astate_, state);
    } catch (const InfeasibleError&) {
      return state.uncolored().min();
    }
  }

  int color(const GameState& state, Element e) override {
    if (!astate_.witness) return smallest_legal(state, e);
    return alice_choose_color(astate_, state, e);
  }

  void observe(const GameState& after, const Round& round) override {
    alice_observe(astate_, after, round);
  }

  std::string state_key() const override { return astate_.key(); }

 private:
  AliceState astate_;
};

class NaiveAlice final : public AliceStrategy {
 public:
  std::unique_ptr<AliceStrategy> clone() const override {
    return std::make_unique<NaiveAlice>(*this);
  }
  Element indicate(const GameState& state) override {
    return state.uncolored().min();
  }
  int color(const GameState& state, Element e) override {
    return smallest_legal(state, e);
  }
  void observe(const GameState&, const Round&) override {}
  std::string state_key() const override { return {}; }
};

}  // namespace

std::unique_ptr<AliceStrategy> make_engine_alice(const GameState& initial) {
  return std::make_unique<EngineAlice>(make_alice_state(initial));
}

std::unique_ptr<AliceStrategy> make_naive_alice() {
  return std::make_unique<NaiveAlice>();
}

}  // namespace micolor
