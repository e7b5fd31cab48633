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

#include "micolor/bob.hpp"

#include <optional>
#include <vector>

#include "micolor/errors.hpp"
#include "micolor/oracle.hpp"

namespace micolor {

namespace {

std::vector<int> nonempty_legal(const GameState& state, Element e) {
  std::vector<int> legal = legal_colors(state, e);
  if (legal.empty()) throw ValidationError("bob wins: no legal color");
  return legal;
}

// Bound on each strategy search; past it the adversary plays first-fit.
constexpr std::size_t kSearchBudget = 100000;

std::optional<oracle::BobMove> winning_move(const GameState& state,
                                            const AliceStrategy& alice) {
  try {
    return oracle::find_bob_win(state, alice, kSearchBudget);
  } catch (const InfeasibleError&) {
    return std::nullopt;
  }
}

// Value of a position at the start of a round under optimal play; empty
// when the position is beyond the solver guards.
std::optional<Role> optimal_value(const GameState& state) {
  if (state.finished()) return *state.winner();
  const std::vector<Matroid> minors = current_minors(state);
  try {
    return state.mode() == Mode::kClassic ? oracle::solve_indicated(minors)
                                          : oracle::solve_modified(minors);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

}  // namespace

int bob_random(const GameState& state, Element e, std::mt19937_64& rng) {
  const std::vector<int> legal = nonempty_legal(state, e);
  std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
  return legal[pick(rng)];
}

int bob_first_fit(const GameState& state, Element e) {
  return nonempty_legal(state, e).front();
}

int bob_adversarial(const GameState& state, Element e,
                    const AliceStrategy* alice) {
  const std::vector<int> legal = nonempty_legal(state, e);
  if (alice != nullptr) {
    GameState pending = state;
    if (pending.awaiting() == Awaiting::kIndication) pending = indicate(pending, e);
    if (auto move = winning_move(pending, *alice)) return move->color;
    return legal.front();
  }
  GameState pending = state.indicated() ? state : indicate(state, e);
  for (int c : legal) {
    if (optimal_value(apply(pending, e, c)) == Role::kBob) return c;
  }
  return legal.front();
}

namespace {

class RandomBob final : public BobStrategy {
 public:
  explicit RandomBob(std::uint64_t seed) : rng_(seed) {}

  MoveKind choose_kind(const GameState&) override {
    std::bernoulli_distribution coin(0.5);
    return coin(rng_) ? MoveKind::kBobIndicates : MoveKind::kAliceIndicates;
  }
  Element indicate(const GameState& state) override {
    const std::vector<Element> open = state.uncolored().to_vector();
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    return open[pick(rng_)];
  }
  int color(const GameState& state, Element e) override {
    return bob_random(state, e, rng_);
  }

 private:
  std::mt19937_64 rng_;
};

class FirstFitBob final : public BobStrategy {
 public:
  MoveKind choose_kind(const GameState&) override {
    return MoveKind::kAliceIndicates;
  }
  Element indicate(const GameState& state) override {
    return state.uncolored().min();
  }
  int color(const GameState& state, Element e) override {
    return bob_first_fit(state, e);
  }
};

class AdversarialBob final : public BobStrategy {
 public:
  explicit AdversarialBob(const AliceStrategy* alice) : alice_(alice) {}

  MoveKind choose_kind(const GameState& state) override {
    if (alice_ != nullptr) {
      if (auto move = winning_move(state, *alice_)) return move->kind;
      return MoveKind::kAliceIndicates;
    }
    const GameState own = micolor::choose_kind(state, MoveKind::kBobIndicates);
    return losing_indication(own) ? MoveKind::kBobIndicates
                                  : MoveKind::kAliceIndicates;
  }

  Element indicate(const GameState& state) override {
    if (alice_ != nullptr) {
      if (auto move = winning_move(state, *alice_)) return move->element;
    }
    return losing_indication(state).value_or(state.uncolored().min());
  }

  int color(const GameState& state, Element e) override {
    return bob_adversarial(state, e, alice_);
  }

 private:
  // An element every Alice color of which leaves a lost position.
  static std::optional<Element> losing_indication(const GameState& state) {
    for (Element e : state.uncolored()) {
      const GameState pending = micolor::indicate(state, e);
      if (pending.finished()) return e;
      bool all_lost = true;
      for (int c : legal_colors(pending, e)) {
        if (optimal_value(apply(pending, e, c)) != Role::kBob) {
          all_lost = false;
          break;
        }
      }
      if (all_lost) return e;
    }
    return std::nullopt;
  }

  const AliceStrategy* alice_;
};

}  // namespace

std::unique_ptr<BobStrategy> make_random_bob(std::uint64_t seed) {
  return std::make_unique<RandomBob>(seed);
}

std::unique_ptr<BobStrategy> make_first_fit_bob() {
  return std::make_unique<FirstFitBob>();
}

std::unique_ptr<BobStrategy> make_adversarial_bob(const AliceStrategy* alice) {
  return std::make_unique<AdversarialBob>(alice);
}

}  // namespace micolor
