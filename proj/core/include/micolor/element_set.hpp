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

#ifndef MICOLOR_ELEMENT_SET_HPP_
#define MICOLOR_ELEMENT_SET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace micolor {

// Element ids are dense 0-based integers. Minors keep the ids of their base.
using Element = int;

inline constexpr int kMaxElements = 64;

// A subset of a ground set, stored as a 64-bit mask.
class ElementSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Element operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr ElementSet(std::initializer_list<Element> ids) {
    for (Element e : ids) insert(e);
  }

  static constexpr ElementSet from_mask(std::uint64_t mask) {
    ElementSet s;
    s.bits_ = mask;
    return s;
  }
  // {0, ..., n-1}
  static constexpr ElementSet first(int n) {
    return from_mask(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet singleton(Element e) {
    return from_mask(std::uint64_t{1} << e);
  }
  static ElementSet from_vector(const std::vector<Element>& ids) {
    ElementSet s;
    for (Element e : ids) s.insert(e);
    return s;
  }

  constexpr std::uint64_t mask() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Element e) const {
    return e >= 0 && e < kMaxElements && ((bits_ >> e) & 1U) != 0;
  }
  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }
  // Smallest id; undefined on the empty set.
  constexpr Element min() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr ElementSet with(Element e) const {
    return from_mask(bits_ | (std::uint64_t{1} << e));
  }
  constexpr ElementSet without(Element e) const {
    return from_mask(bits_ & ~(std::uint64_t{1} << e));
  }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }
  std::string to_string() const {
    std::string out = "{";
    bool first_item = true;
    for (Element e : *this) {
      if (!first_item) out += ",";
      out += std::to_string(e);
      first_item = false;
    }
    return out + "}";
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return from_mask(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return from_mask(a.bits_ & b.bits_);
  }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return from_mask(a.bits_ & ~b.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Orders sets by size, then lexicographically by their sorted id lists.
inline bool size_lex_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.to_vector() < b.to_vector();
}

// Calls fn(subset) for every subset of `universe`, including empty and full.
template <typename Fn>
void for_each_subset(ElementSet universe, Fn&& fn) {
  const std::uint64_t full = universe.mask();
  std::uint64_t sub = 0;
  while (true) {
    fn(ElementSet::from_mask(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace micolor

#endif  // MICOLOR_ELEMENT_SET_HPP_
