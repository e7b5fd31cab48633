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

#include "micolor/union.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "micolor/errors.hpp"

namespace micolor {

int Cover::color_of(Element e) const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].contains(e)) return static_cast<int>(i) + 1;
  }
  return 0;
}

ElementSet shared_ground_set(std::span<const Matroid> matroids) {
  if (matroids.empty()) throw ValidationError("matroids: need at least one");
  const ElementSet ground = matroids.front().ground_set();
  for (std::size_t i = 1; i < matroids.size(); ++i) {
    if (matroids[i].ground_set() != ground) {
      throw ValidationError("matroids[" + std::to_string(i) +
                            "]: ground set differs from matroids[0]");
    }
  }
  return ground;
}

int surplus(std::span<const Matroid> matroids, ElementSet a) {
  shared_ground_set(matroids);
  int total = -a.size();
  for (const Matroid& m : matroids) total += m.rank(a);
  return total;
}

namespace {

struct Step {
  Element from = -1;
  int color = -1;  // color index `from` moves into
};

}  // namespace

PartitionResult partition_ground_set(std::span<const Matroid> matroids) {
  const ElementSet ground = shared_ground_set(matroids);
  const int k = static_cast<int>(matroids.size());
  std::vector<ElementSet> parts(k);
  ElementSet assigned;

  for (Element start : ground) {
    // parent[x]: element that displaces x and the color it enters.
    std::vector<Step> parent(kMaxElements);
    ElementSet visited = ElementSet::singleton(start);
    std::deque<Element> queue{start};
    Element sink = -1;
    int sink_color = -1;
    while (!queue.empty() && sink < 0) {
      const Element y = queue.front();
      queue.pop_front();
      for (int i = 0; i < k && sink < 0; ++i) {
        if (parts[i].contains(y)) continue;
        if (matroids[i].is_independent(parts[i].with(y))) {
          sink = y;
          sink_color = i;
          break;
        }
        const ElementSet circuit = fundamental_circuit(matroids[i], parts[i], y);
        for (Element x : circuit.without(y) - visited) {
          visited.insert(x);
          parent[x] = Step{y, i};
          queue.push_back(x);
        }
      }
    }
    if (sink < 0) {
      Violator v{visited, surplus(matroids, visited)};
      if (v.surplus >= 0) {
        throw InvariantError("partition_ground_set: reachable set " +
                             v.set.to_string() + " has surplus " +
                             std::to_string(v.surplus));
      }
      return v;
    }
    // Walk back from the sink: each element enters its new color and the
    // element it displaced moves on.
    Element y = sink;
    int color = sink_color;
    while (true) {
      for (int i = 0; i < k; ++i) parts[i].erase(y);
      parts[color].insert(y);
      if (y == start) break;
      // y was displaced by parent[y].from, which enters parent[y].color.
      color = parent[y].color;
      y = parent[y].from;
    }
    assigned.insert(start);
  }
  Cover cover{std::move(parts)};
  if (!verify_cover(matroids, cover)) {
    throw InvariantError("partition_ground_set: produced an invalid cover");
  }
  return cover;
}

bool verify_cover(std::span<const Matroid> matroids, const Cover& cover) {
  ElementSet ground;
  try {
    ground = shared_ground_set(matroids);
  } catch (const ValidationError&) {
    return false;
  }
  if (cover.parts.size() != matroids.size()) return false;
  ElementSet seen;
  for (std::size_t i = 0; i < cover.parts.size(); ++i) {
    const ElementSet part = cover.parts[i];
    if (!(part & seen).empty() || !part.subset_of(ground)) return false;
    if (!matroids[i].is_independent(part)) return false;
    seen |= part;
  }
  return seen == ground;
}

int chromatic_number(const Matroid& m) {
  if (!loops(m).empty()) {
    throw ValidationError("chromatic number undefined for loopy matroid");
  }
  if (m.ground_set().empty()) return 0;
  for (int k = 1;; ++k) {
    std::vector<Matroid> copies(k, m);
    if (std::holds_alternative<Cover>(partition_ground_set(copies))) return k;
  }
}

std::optional<ElementSet> find_proper_tight_set(
    std::span<const Matroid> matroids, const Cover& cover) {
  if (!verify_cover(matroids, cover)) {
    throw ValidationError("find_proper_tight_set: cover is not valid");
  }
  const ElementSet ground = matroids.front().ground_set();
  const int k = static_cast<int>(matroids.size());
  for (Element seed : ground) {
    ElementSet reached = ElementSet::singleton(seed);
    std::deque<Element> queue{seed};
    bool escaped = false;
    while (!queue.empty() && !escaped) {
      const Element y = queue.front();
      queue.pop_front();
      for (int i = 0; i < k; ++i) {
        const ElementSet part = cover.parts[i];
        if (part.contains(y)) continue;
        if (matroids[i].is_independent(part.with(y))) {
          escaped = true;
          break;
        }
        for (Element x : fundamental_circuit(matroids[i], part, y).without(y) - reached) {
          reached.insert(x);
          queue.push_back(x);
        }
      }
    }
    if (escaped || reached == ground) continue;
    if (surplus(matroids, reached) != 0) {
      throw InvariantError("find_proper_tight_set: closure " +
                           reached.to_string() + " is not tight");
    }
    return reached;
  }
  return std::nullopt;
}

}  // namespace micolor
