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

#ifndef MICOLOR_MATROID_HPP_
#define MICOLOR_MATROID_HPP_

#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "micolor/element_set.hpp"

namespace micolor {

struct UniformSpec {
  int n = 0;
  int r = 0;
};

struct GraphicSpec {
  int num_vertices = 0;
  // Edge i is element i. u == v is a self-loop.
  std::vector<std::pair<int, int>> edges;
};

struct LinearSpec {
  std::uint32_t p = 2;
  int num_rows = 0;
  int num_cols = 0;
  // Row-major; column j is element j. Entries in [0, p).
  std::vector<std::vector<std::uint32_t>> rows;
};

struct PartitionBlock {
  int capacity = 0;
  std::vector<Element> elements;
};

struct PartitionSpec {
  int n = 0;
  std::vector<PartitionBlock> blocks;
};

using FamilySpec =
    std::variant<UniformSpec, GraphicSpec, LinearSpec, PartitionSpec>;

namespace detail {
class RankOracle;
}

// An immutable rank oracle over a finite ground set of element ids.
//
// A base matroid has ground set {0, ..., n-1}. Minors are views
// (base, contracted set C, ground set S) with
//   rank(B) = base_rank(B | C) - base_rank(C)   for B a subset of S,
// which is closed under composition, so minors of minors stay flat.
// Copies share the underlying oracle and are cheap.
class Matroid {
 public:
  // Throws ValidationError naming the offending field.
  static Matroid construct(const FamilySpec& spec);
  static Matroid uniform(int n, int r);
  static Matroid graphic(int num_vertices,
                         std::vector<std::pair<int, int>> edges);
  static Matroid linear(std::uint32_t p,
                        std::vector<std::vector<std::uint32_t>> rows);
  static Matroid partition(int n, std::vector<PartitionBlock> blocks);

  ElementSet ground_set() const { return ground_; }
  int ground_size() const { return ground_.size(); }
  // Size of the base matroid's ground set; ids lie in [0, base_size()).
  int base_size() const;
  ElementSet contracted_set() const { return contracted_; }
  bool is_minor() const;
  // Descriptor of the base family (minor views report their base).
  const FamilySpec& base_spec() const;

  // Throws ValidationError if `a` is not inside the ground set.
  int rank(ElementSet a) const;
  int full_rank() const { return rank(ground_); }
  bool is_independent(ElementSet a) const { return rank(a) == a.size(); }

  Matroid restriction(ElementSet s) const;
  Matroid contraction(ElementSet c) const;

 private:
  Matroid(std::shared_ptr<const detail::RankOracle> base, ElementSet ground,
          ElementSet contracted);

  int base_rank(ElementSet a) const;

  std::shared_ptr<const detail::RankOracle> base_;
  ElementSet ground_;
  ElementSet contracted_;
  int contracted_rank_ = 0;
};

inline int rank(const Matroid& m, ElementSet a) { return m.rank(a); }
inline bool is_independent(const Matroid& m, ElementSet a) {
  return m.is_independent(a);
}
inline Matroid restriction(const Matroid& m, ElementSet s) {
  return m.restriction(s);
}
inline Matroid contraction(const Matroid& m, ElementSet c) {
  return m.contraction(c);
}

// The unique circuit inside independent | {e}. Throws ValidationError when
// `independent` is dependent, e is already in it, or independent | {e} is
// itself independent ("no circuit").
ElementSet fundamental_circuit(const Matroid& m, ElementSet independent,
                               Element e);

ElementSet closure(const Matroid& m, ElementSet a);

ElementSet loops(const Matroid& m);

bool is_prime(std::uint64_t p);

}  // namespace micolor

#endif  // MICOLOR_MATROID_HPP_
