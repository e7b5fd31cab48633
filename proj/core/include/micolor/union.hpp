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

#ifndef MICOLOR_UNION_HPP_
#define MICOLOR_UNION_HPP_

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "micolor/element_set.hpp"
#include "micolor/matroid.hpp"

namespace micolor {

// Disjoint parts covering the shared ground set, part i independent in
// matroid i.
struct Cover {
  std::vector<ElementSet> parts;

  // 1-based color of the part holding e, or 0.
  int color_of(Element e) const;
  bool operator==(const Cover&) const = default;
};

// A nonempty set whose rank sum falls short of its size.
struct Violator {
  ElementSet set;
  int surplus = 0;
};

using PartitionResult = std::variant<Cover, Violator>;

// Checks that all matroids share one ground set; throws ValidationError
// otherwise or when the list is empty. Returns the shared ground set.
ElementSet shared_ground_set(std::span<const Matroid> matroids);

// Sum of ranks of A minus |A|.
int surplus(std::span<const Matroid> matroids, ElementSet a);

// Matroid partition by shortest augmenting paths in the exchange digraph.
// Elements are inserted in ascending id order; the search is breadth-first
// over ascending ids and colors. On failure returns the set reachable from
// the stuck element, whose surplus is -1.
PartitionResult partition_ground_set(std::span<const Matroid> matroids);

bool verify_cover(std::span<const Matroid> matroids, const Cover& cover);

// Least k such that k copies of m cover its ground set. Throws
// ValidationError on a matroid with loops; 0 for an empty ground set.
int chromatic_number(const Matroid& m);

// First proper nonempty tight set found by seeding the exchange closure at
// each element in ascending order. The result is the minimal tight set
// containing its seed. Throws ValidationError if `cover` is not valid.
std::optional<ElementSet> find_proper_tight_set(
    std::span<const Matroid> matroids, const Cover& cover);

}  // namespace micolor

#endif  // MICOLOR_UNION_HPP_
