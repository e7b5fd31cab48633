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

#ifndef MICOLOR_ORACLE_HPP_
#define MICOLOR_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "micolor/element_set.hpp"
#include "micolor/game.hpp"
#include "micolor/matroid.hpp"
#include "micolor/strategy.hpp"

// Exhaustive reference answers. Nothing here calls the union engine; the
// game solvers work on precomputed independence tables and do not use the
// referee, so they can check both independently.
namespace micolor::oracle {

inline constexpr int kMaxCoverElements = 12;
inline constexpr int kMaxChromaticElements = 9;
inline constexpr int kMaxIndicatedElements = 8;
inline constexpr int kMaxModifiedElements = 7;
inline constexpr int kMaxSolverColors = 8;

// Exhaustive search over labelings, pruned on dependent classes.
bool bf_cover_exists(std::span<const Matroid> matroids);

int bf_chromatic(const Matroid& m);

// All proper nonempty sets of surplus 0, ordered by size then lexicographically.
std::vector<ElementSet> bf_tight_sets(std::span<const Matroid> matroids);

// Winner of the generalized indicated game under optimal play.
Role solve_indicated(std::span<const Matroid> matroids);
// k copies of m; k = 0 is allowed.
Role solve_indicated(const Matroid& m, int colors);

// Winner of the generalized modified game, where Bob picks the move kind
// every round.
Role solve_modified(std::span<const Matroid> matroids);
Role solve_modified(const Matroid& m, int colors);

struct SearchStats {
  std::size_t states = 0;
};

// Whether some sequence of Bob decisions beats the given Alice policy from
// `state`, enumerating every move kind, indication and color Bob may pick.
bool bob_beats(const GameState& state, const AliceStrategy& alice,
               SearchStats* stats = nullptr);

// Bob's decision at `state` that starts a winning line against `alice`.
// Only the field matching state.awaiting() is meaningful. A nonzero
// max_states bounds the search; exceeding it throws InfeasibleError.
struct BobMove {
  MoveKind kind = MoveKind::kAliceIndicates;
  Element element = 0;
  int color = 0;
};
std::optional<BobMove> find_bob_win(const GameState& state,
                                    const AliceStrategy& alice,
                                    std::size_t max_states = 0);

}  // namespace micolor::oracle

#endif  // MICOLOR_ORACLE_HPP_
