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

#ifndef MICOLOR_TESTS_FIXTURES_HPP_
#define MICOLOR_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "micolor/element_set.hpp"
#include "micolor/matroid.hpp"

namespace micolor::testing {

using Edges = std::vector<std::pair<int, int>>;

// K4 on vertices 1..4 (stored 0-based) in the order
// 1-3, 3-2, 1-4, 4-2, 1-2, 3-4.
inline Edges k4_edges() { return {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 1}, {2, 3}}; }
inline Matroid k4() { return Matroid::graphic(4, k4_edges()); }

inline Edges complete_edges(int n) {
  Edges out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
  }
  return out;
}

inline Matroid complete_graph(int n) { return Matroid::graphic(n, complete_edges(n)); }

inline Edges k33_edges() {
  Edges out;
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 6; ++v) out.emplace_back(u, v);
  }
  return out;
}

inline Edges petersen_edges() {
  Edges out;
  for (int i = 0; i < 5; ++i) {
    out.emplace_back(i, (i + 1) % 5);          // outer cycle
    out.emplace_back(i, i + 5);                // spokes
    out.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return out;
}

// Two partition matroids with blocks {0,1}, {2,3}, capacity 1 each.
inline Matroid pair_blocks() {
  return Matroid::partition(4, {{1, {0, 1}}, {1, {2, 3}}});
}

inline Matroid triangle() { return Matroid::graphic(3, {{0, 1}, {1, 2}, {2, 0}}); }

inline std::vector<Matroid> copies(const Matroid& m, int k) {
  return std::vector<Matroid>(k, m);
}

// ---------------------------------------------------------------------------
// Random instances. All generators are deterministic functions of the rng.

inline Matroid random_graphic(std::mt19937_64& rng, int num_vertices,
                              int num_edges, bool allow_self_loops = false) {
  std::uniform_int_distribution<int> vertex(0, num_vertices - 1);
  Edges edges;
  while (static_cast<int>(edges.size()) < num_edges) {
    int u = vertex(rng);
    int v = vertex(rng);
    if (u == v && !allow_self_loops) continue;
    edges.emplace_back(u, v);
  }
  return Matroid::graphic(num_vertices, edges);
}

inline Matroid random_linear(std::mt19937_64& rng, std::uint32_t p, int rows,
                             int cols, bool allow_zero_columns = true) {
  std::uniform_int_distribution<std::uint32_t> entry(0, p - 1);
  while (true) {
    std::vector<std::vector<std::uint32_t>> m(rows, std::vector<std::uint32_t>(cols));
    for (auto& row : m) {
      for (auto& x : row) x = entry(rng);
    }
    bool ok = true;
    if (!allow_zero_columns) {
      for (int c = 0; c < cols && ok; ++c) {
        bool zero = true;
        for (int r = 0; r < rows; ++r) zero = zero && m[r][c] == 0;
        ok = !zero;
      }
    }
    if (ok) return Matroid::linear(p, m);
  }
}

inline Matroid random_partition(std::mt19937_64& rng, int n, int min_capacity = 0,
                                int max_capacity = 2) {
  std::vector<Element> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  std::uniform_int_distribution<int> block_size(1, std::max(1, n));
  std::uniform_int_distribution<int> capacity(min_capacity, max_capacity);
  std::vector<PartitionBlock> blocks;
  for (int at = 0; at < n;) {
    const int size = std::min(block_size(rng), n - at);
    PartitionBlock b;
    b.capacity = capacity(rng);
    b.elements.assign(ids.begin() + at, ids.begin() + at + size);
    std::sort(b.elements.begin(), b.elements.end());
    blocks.push_back(std::move(b));
    at += size;
  }
  return Matroid::partition(n, blocks);
}

inline Matroid random_uniform(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> r(0, n);
  return Matroid::uniform(n, r(rng));
}

// A matroid on exactly n elements from a random family.
inline Matroid random_matroid(std::mt19937_64& rng, int n) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:
      return random_uniform(rng, n);
    case 1:
      return random_graphic(rng, std::uniform_int_distribution<int>(2, 5)(rng), n);
    case 2:
      return random_linear(rng, std::uniform_int_distribution<int>(0, 1)(rng) ? 2 : 3,
                           std::uniform_int_distribution<int>(1, 3)(rng), n);
    default:
      return random_partition(rng, n);
  }
}

inline ElementSet random_subset(std::mt19937_64& rng, ElementSet universe) {
  std::bernoulli_distribution coin(0.5);
  ElementSet out;
  for (Element e : universe) {
    if (coin(rng)) out.insert(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Independent reference computations.

// Rank of an edge set as |V(A)| - #components of the subgraph (V(A), A),
// found by depth-first search.
inline int forest_rank_by_search(int num_vertices, const Edges& edges, ElementSet a) {
  std::vector<std::vector<int>> adj(num_vertices);
  std::vector<bool> touched(num_vertices, false);
  for (Element e : a) {
    auto [u, v] = edges[e];
    adj[u].push_back(v);
    adj[v].push_back(u);
    touched[u] = touched[v] = true;
  }
  std::vector<bool> seen(num_vertices, false);
  int vertices = 0;
  int components = 0;
  for (int s = 0; s < num_vertices; ++s) {
    if (!touched[s] || seen[s]) continue;
    ++components;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++vertices;
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return vertices - components;
}

// Rank over GF(p) as log_p of the number of distinct vectors in the span,
// enumerating every combination of the chosen columns.
inline int span_rank_by_enumeration(std::uint32_t p,
                                    const std::vector<std::vector<std::uint32_t>>& rows,
                                    ElementSet a) {
  const std::vector<Element> cols = a.to_vector();
  const int num_rows = static_cast<int>(rows.size());
  std::set<std::vector<std::uint32_t>> span;
  std::vector<std::uint32_t> coeff(cols.size(), 0);
  while (true) {
    std::vector<std::uint32_t> v(num_rows, 0);
    for (int r = 0; r < num_rows; ++r) {
      std::uint64_t sum = 0;
      for (std::size_t j = 0; j < cols.size(); ++j) sum += std::uint64_t{coeff[j]} * rows[r][cols[j]];
      v[r] = static_cast<std::uint32_t>(sum % p);
    }
    span.insert(v);
    std::size_t j = 0;
    while (j < coeff.size() && ++coeff[j] == p) coeff[j++] = 0;
    if (j == coeff.size()) break;
  }
  int r = 0;
  for (std::size_t size = 1; size < span.size(); size *= p) ++r;
  return r;
}

// Nash-Williams: arboricity as the max over vertex subsets S with |S| >= 2 of
// ceil(m(S) / (|S| - 1)), m(S) the number of edges inside S.
inline int arboricity_by_density(int num_vertices, const Edges& edges) {
  int best = 0;
  for (std::uint32_t s = 0; s < (1U << num_vertices); ++s) {
    const int size = std::popcount(s);
    if (size < 2) continue;
    int inside = 0;
    for (auto [u, v] : edges) {
      if (((s >> u) & 1U) && ((s >> v) & 1U)) ++inside;
    }
    best = std::max(best, (inside + size - 2) / (size - 1));
  }
  return best;
}

// max over nonempty A of ceil(|A| / r(A)); requires a loopless matroid.
inline int density_bound(const Matroid& m) {
  int best = 0;
  for_each_subset(m.ground_set(), [&](ElementSet a) {
    if (a.empty()) return;
    const int r = m.rank(a);
    best = std::max(best, (a.size() + r - 1) / r);
  });
  return best;
}

}  // namespace micolor::testing

#endif  // MICOLOR_TESTS_FIXTURES_HPP_
