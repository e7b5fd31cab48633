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

#include "micolor/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "micolor/errors.hpp"

namespace micolor::oracle {

namespace {

ElementSet common_ground(std::span<const Matroid> matroids, const char* op) {
  if (matroids.empty()) {
    throw ValidationError(std::string(op) + ": need at least one matroid");
  }
  const ElementSet ground = matroids.front().ground_set();
  for (const Matroid& m : matroids) {
    if (m.ground_set() != ground) {
      throw ValidationError(std::string(op) + ": ground sets differ");
    }
  }
  return ground;
}

void guard(const char* op, int n, int limit) {
  if (n > limit) {
    throw ValidationError(std::string(op) + ": ground set of " +
                          std::to_string(n) + " elements exceeds the limit of " +
                          std::to_string(limit));
  }
}

// Independence of every subset, indexed by masks over positions 0..n-1 of
// the ground set's ascending id list.
class IndependenceTable {
 public:
  IndependenceTable(std::span<const Matroid> matroids, ElementSet ground)
      : n_(ground.size()), ids_(ground.to_vector()) {
    const std::uint32_t subsets = 1U << n_;
    table_.resize(matroids.size() * subsets);
    for (std::size_t i = 0; i < matroids.size(); ++i) {
      for (std::uint32_t mask = 0; mask < subsets; ++mask) {
        table_[i * subsets + mask] = matroids[i].is_independent(to_set(mask));
      }
    }
  }

  int size() const { return n_; }
  bool independent(int color, std::uint32_t mask) const {
    return table_[(static_cast<std::size_t>(color) << n_) + mask];
  }

 private:
  ElementSet to_set(std::uint32_t mask) const {
    ElementSet s;
    for (int p = 0; p < n_; ++p) {
      if ((mask >> p) & 1U) s.insert(ids_[p]);
    }
    return s;
  }

  int n_;
  std::vector<Element> ids_;
  std::vector<bool> table_;
};

// Position p's color c (1-based) occupies 4 bits of the memo key.
struct Position {
  std::vector<std::uint32_t> classes;
  std::uint32_t colored = 0;
  std::uint32_t key = 0;

  void set(int p, int color) {
    classes[color] |= 1U << p;
    colored |= 1U << p;
    key |= static_cast<std::uint32_t>(color + 1) << (4 * p);
  }
  void unset(int p, int color) {
    classes[color] &= ~(1U << p);
    colored &= ~(1U << p);
    key &= ~(0xFU << (4 * p));
  }
};

class GameSolver {
 public:
  GameSolver(std::span<const Matroid> matroids, ElementSet ground)
      : table_(matroids, ground), k_(static_cast<int>(matroids.size())) {
    pos_.classes.assign(k_, 0);
    full_ = (1U << table_.size()) - 1;
  }

  bool alice_wins_indicated() {
    if (pos_.colored == full_) return true;
    if (auto it = memo_.find(pos_.key); it != memo_.end()) return it->second;
    bool result = false;
    for (int p = 0; p < table_.size() && !result; ++p) {
      if ((pos_.colored >> p) & 1U) continue;
      result = survives_every_color(p, [this] { return alice_wins_indicated(); });
    }
    memo_[pos_.key] = result;
    return result;
  }

  bool alice_wins_modified() {
    if (pos_.colored == full_) return true;
    if (auto it = memo_.find(pos_.key); it != memo_.end()) return it->second;
    auto next = [this] { return alice_wins_modified(); };
    // Kind 1: Alice needs one indication that survives all of Bob's colors.
    bool kind1 = false;
    for (int p = 0; p < table_.size() && !kind1; ++p) {
      if ((pos_.colored >> p) & 1U) continue;
      kind1 = survives_every_color(p, next);
    }
    // Kind 2: every indication of Bob needs a winning color.
    bool kind2 = kind1;
    for (int p = 0; p < table_.size() && kind2; ++p) {
      if ((pos_.colored >> p) & 1U) continue;
      bool found = false;
      for (int c = 0; c < k_ && !found; ++c) {
        if (!legal(p, c)) continue;
        pos_.set(p, c);
        found = next();
        pos_.unset(p, c);
      }
      kind2 = found;
    }
    memo_[pos_.key] = kind2;
    return kind2;
  }

 private:
  bool legal(int p, int c) const {
    return table_.independent(c, pos_.classes[c] | (1U << p));
  }

  // True iff p has a legal color and every legal color leads to an Alice win.
  template <typename Next>
  bool survives_every_color(int p, Next&& next) {
    bool any_legal = false;
    for (int c = 0; c < k_; ++c) {
      if (!legal(p, c)) continue;
      any_legal = true;
      pos_.set(p, c);
      const bool win = next();
      pos_.unset(p, c);
      if (!win) return false;
    }
    return any_legal;
  }

  IndependenceTable table_;
  int k_;
  std::uint32_t full_;
  Position pos_;
  std::unordered_map<std::uint32_t, bool> memo_;
};

Role solve(std::span<const Matroid> matroids, bool modified) {
  const char* op = modified ? "solve_modified" : "solve_indicated";
  const ElementSet ground = common_ground(matroids, op);
  guard(op, ground.size(),
        modified ? kMaxModifiedElements : kMaxIndicatedElements);
  if (static_cast<int>(matroids.size()) > kMaxSolverColors) {
    throw ValidationError(std::string(op) + ": more than " +
                          std::to_string(kMaxSolverColors) + " colors");
  }
  GameSolver solver(matroids, ground);
  const bool alice = modified ? solver.alice_wins_modified()
                              : solver.alice_wins_indicated();
  return alice ? Role::kAlice : Role::kBob;
}

}  // namespace

bool bf_cover_exists(std::span<const Matroid> matroids) {
  const ElementSet ground = common_ground(matroids, "bf_cover_exists");
  guard("bf_cover_exists", ground.size(), kMaxCoverElements);
  const IndependenceTable table(matroids, ground);
  const int k = static_cast<int>(matroids.size());
  std::vector<std::uint32_t> classes(k, 0);
  std::function<bool(int)> assign = [&](int p) {
    if (p == table.size()) return true;
    for (int c = 0; c < k; ++c) {
      const std::uint32_t grown = classes[c] | (1U << p);
      if (!table.independent(c, grown)) continue;
      classes[c] = grown;
      if (assign(p + 1)) return true;
      classes[c] &= ~(1U << p);
    }
    return false;
  };
  return assign(0);
}

int bf_chromatic(const Matroid& m) {
  guard("bf_chromatic", m.ground_size(), kMaxChromaticElements);
  for (Element e : m.ground_set()) {
    if (m.rank(ElementSet::singleton(e)) == 0) {
      throw ValidationError("bf_chromatic: matroid has a loop");
    }
  }
  if (m.ground_set().empty()) return 0;
  for (int k = 1;; ++k) {
    std::vector<Matroid> copies(k, m);
    if (bf_cover_exists(copies)) return k;
  }
}

std::vector<ElementSet> bf_tight_sets(std::span<const Matroid> matroids) {
  const ElementSet ground = common_ground(matroids, "bf_tight_sets");
  guard("bf_tight_sets", ground.size(), kMaxCoverElements);
  std::vector<ElementSet> out;
  for_each_subset(ground, [&](ElementSet a) {
    if (a.empty() || a == ground) return;
    int total = 0;
    for (const Matroid& m : matroids) total += m.rank(a);
    if (total == a.size()) out.push_back(a);
  });
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

Role solve_indicated(std::span<const Matroid> matroids) {
  return solve(matroids, false);
}

Role solve_indicated(const Matroid& m, int colors) {
  if (colors == 0) return m.ground_set().empty() ? Role::kAlice : Role::kBob;
  std::vector<Matroid> copies(colors, m);
  return solve_indicated(copies);
}

Role solve_modified(std::span<const Matroid> matroids) {
  return solve(matroids, true);
}

Role solve_modified(const Matroid& m, int colors) {
  if (colors == 0) return m.ground_set().empty() ? Role::kAlice : Role::kBob;
  std::vector<Matroid> copies(colors, m);
  return solve_modified(copies);
}

namespace {

class StrategySearch {
 public:
  StrategySearch(SearchStats* stats, std::size_t max_states)
      : stats_(stats), max_states_(max_states) {}

  bool bob_wins(const GameState& state, const AliceStrategy& alice) {
    if (state.finished()) return state.winner() == Role::kBob;
    const std::string key = state_key(state, alice);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (stats_ != nullptr) ++stats_->states;
    if (max_states_ != 0 && ++visited_ > max_states_) {
      throw InfeasibleError("strategy search exceeded " + std::to_string(max_states_) + " states");
    }
    const bool result = first_winning_move(state, alice).has_value();
    memo_[key] = result;
    return result;
  }

  // Bob's first winning decision at a Bob decision point. At Alice decision
  // points returns a default-constructed move iff Bob wins after it.
  std::optional<BobMove> first_winning_move(const GameState& state,
                                            const AliceStrategy& alice) {
    switch (state.awaiting()) {
      case Awaiting::kFinished:
        if (state.winner() == Role::kBob) return BobMove{};
        return std::nullopt;
      case Awaiting::kKind:
        for (MoveKind kind : {MoveKind::kAliceIndicates, MoveKind::kBobIndicates}) {
          if (bob_wins(choose_kind(state, kind), alice)) return BobMove{kind, 0, 0};
        }
        return std::nullopt;
      case Awaiting::kIndication:
        if (state.indicator() == Role::kAlice) {
          std::unique_ptr<AliceStrategy> a = alice.clone();
          const Element e = a->indicate(state);
          if (bob_wins(indicate(state, e), *a)) return BobMove{};
          return std::nullopt;
        }
        for (Element e : state.uncolored()) {
          if (bob_wins(indicate(state, e), alice)) {
            return BobMove{MoveKind::kBobIndicates, e, 0};
          }
        }
        return std::nullopt;
      case Awaiting::kColor: {
        const Element e = *state.indicated();
        const std::vector<int> legal = legal_colors(state, e);
        if (state.colorist() == Role::kAlice) {
          std::unique_ptr<AliceStrategy> a = alice.clone();
          const int c = a->color(state, e);
          // A policy that offers an illegal color has lost.
          if (std::find(legal.begin(), legal.end(), c) == legal.end()) return BobMove{};
          GameState child = apply(state, e, c);
          a->observe(child, child.rounds().back());
          if (bob_wins(child, *a)) return BobMove{};
          return std::nullopt;
        }
        for (int c : legal) {
          GameState child = apply(state, e, c);
          std::unique_ptr<AliceStrategy> a = alice.clone();
          a->observe(child, child.rounds().back());
          if (bob_wins(child, *a)) return BobMove{MoveKind::kAliceIndicates, e, c};
        }
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

 private:
  static std::string state_key(const GameState& state, const AliceStrategy& alice) {
    std::string key;
    key += static_cast<char>('0' + static_cast<int>(state.awaiting()));
    key += state.pending_kind() == MoveKind::kBobIndicates ? 'b' : 'a';
    key += std::to_string(state.indicated().value_or(-1));
    key += ':';
    for (Element e : state.ground_set()) {
      key += static_cast<char>('0' + state.color_of(e));
    }
    key += ':';
    key += alice.state_key();
    return key;
  }

  SearchStats* stats_;
  std::size_t max_states_;
  std::size_t visited_ = 0;
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace

bool bob_beats(const GameState& state, const AliceStrategy& alice,
               SearchStats* stats) {
  StrategySearch search(stats, 0);
  return search.bob_wins(state, alice);
}

std::optional<BobMove> find_bob_win(const GameState& state,
                                    const AliceStrategy& alice,
                                    std::size_t max_states) {
  StrategySearch search(nullptr, max_states);
  return search.first_winning_move(state, alice);
}

}  // namespace micolor::oracle
