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

#include "micolor/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "micolor/errors.hpp"

namespace micolor {
namespace detail {

class RankOracle {
 public:
  explicit RankOracle(FamilySpec spec, int n) : spec_(std::move(spec)), n_(n) {}
  virtual ~RankOracle() = default;

  // `a` is a subset of {0, ..., n-1}.
  virtual int rank(ElementSet a) const = 0;

  const FamilySpec& spec() const { return spec_; }
  int size() const { return n_; }

 private:
  FamilySpec spec_;
  int n_;
};

namespace {

class UniformOracle final : public RankOracle {
 public:
  explicit UniformOracle(const UniformSpec& s) : RankOracle(s, s.n), r_(s.r) {}
  int rank(ElementSet a) const override { return std::min(a.size(), r_); }

 private:
  int r_;
};

class GraphicOracle final : public RankOracle {
 public:
  explicit GraphicOracle(const GraphicSpec& s)
      : RankOracle(s, static_cast<int>(s.edges.size())),
        num_vertices_(s.num_vertices),
        edges_(s.edges) {}

  // Number of successful unions of a fresh disjoint-set forest.
  int rank(ElementSet a) const override {
    std::vector<int> parent(num_vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    int merged = 0;
    for (Element e : a) {
      int ru = find(edges_[e].first);
      int rv = find(edges_[e].second);
      if (ru != rv) {
        parent[ru] = rv;
        ++merged;
      }
    }
    return merged;
  }

 private:
  int num_vertices_;
  std::vector<std::pair<int, int>> edges_;
};

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

class LinearOracle final : public RankOracle {
 public:
  explicit LinearOracle(const LinearSpec& s)
      : RankOracle(s, s.num_cols), p_(s.p), rows_(s.rows) {}

  // Gauss-Jordan elimination over GF(p) on the selected columns.
  int rank(ElementSet a) const override {
    const int num_rows = static_cast<int>(rows_.size());
    const std::vector<Element> cols = a.to_vector();
    std::vector<std::vector<std::uint64_t>> m(
        num_rows, std::vector<std::uint64_t>(cols.size()));
    for (int i = 0; i < num_rows; ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = rows_[i][cols[j]];
    }
    int r = 0;
    for (std::size_t col = 0; col < cols.size() && r < num_rows; ++col) {
      int pivot = -1;
      for (int i = r; i < num_rows; ++i) {
        if (m[i][col] != 0) {
          pivot = i;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(m[pivot], m[r]);
      const std::uint64_t inv = pow_mod(m[r][col], p_ - 2, p_);
      for (std::size_t j = col; j < cols.size(); ++j) m[r][j] = m[r][j] * inv % p_;
      for (int i = 0; i < num_rows; ++i) {
        if (i == r || m[i][col] == 0) continue;
        const std::uint64_t f = m[i][col];
        for (std::size_t j = col; j < cols.size(); ++j) {
          m[i][j] = (m[i][j] + (p_ - f) * m[r][j]) % p_;
        }
      }
      ++r;
    }
    return r;
  }

 private:
  std::uint64_t p_;
  std::vector<std::vector<std::uint32_t>> rows_;
};

class PartitionOracle final : public RankOracle {
 public:
  explicit PartitionOracle(const PartitionSpec& s) : RankOracle(s, s.n) {
    for (const PartitionBlock& b : s.blocks) {
      blocks_.emplace_back(ElementSet::from_vector(b.elements), b.capacity);
    }
  }
  int rank(ElementSet a) const override {
    int r = 0;
    for (const auto& [block, cap] : blocks_) r += std::min((a & block).size(), cap);
    return r;
  }

 private:
  std::vector<std::pair<ElementSet, int>> blocks_;
};

[[noreturn]] void invalid(const std::string& what) { throw ValidationError(what); }

void check_size(const char* field, int n) {
  if (n < 0) invalid(std::string(field) + ": must be non-negative");
  if (n > kMaxElements) {
    invalid(std::string(field) + ": ground set larger than " +
            std::to_string(kMaxElements) + " elements is not supported");
  }
}

std::shared_ptr<const RankOracle> build(const UniformSpec& s) {
  check_size("uniform.n", s.n);
  if (s.r < 0 || s.r > s.n) invalid("uniform.r: must satisfy 0 <= r <= n");
  return std::make_shared<UniformOracle>(s);
}

std::shared_ptr<const RankOracle> build(const GraphicSpec& s) {
  if (s.num_vertices < 0) invalid("graphic.num_vertices: must be non-negative");
  check_size("graphic.edges", static_cast<int>(s.edges.size()));
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    auto [u, v] = s.edges[i];
    if (u < 0 || u >= s.num_vertices || v < 0 || v >= s.num_vertices) {
      invalid("graphic.edges[" + std::to_string(i) +
              "]: endpoint out of range [0, " +
              std::to_string(s.num_vertices) + ")");
    }
  }
  return std::make_shared<GraphicOracle>(s);
}

std::shared_ptr<const RankOracle> build(const LinearSpec& s) {
  if (!is_prime(s.p)) invalid("linear.p: " + std::to_string(s.p) + " is not prime");
  if (s.p > (std::uint64_t{1} << 31)) invalid("linear.p: must be at most 2^31");
  if (s.num_rows < 0) invalid("linear.rows: must be non-negative");
  check_size("linear.cols", s.num_cols);
  if (static_cast<int>(s.rows.size()) != s.num_rows) {
    invalid("linear.rows: expected " + std::to_string(s.num_rows) +
            " rows, got " + std::to_string(s.rows.size()));
  }
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    if (static_cast<int>(s.rows[i].size()) != s.num_cols) {
      invalid("linear.rows[" + std::to_string(i) + "]: expected " +
              std::to_string(s.num_cols) + " entries");
    }
    for (std::uint32_t x : s.rows[i]) {
      if (x >= s.p) {
        invalid("linear.rows[" + std::to_string(i) + "]: entry " +
                std::to_string(x) + " not in [0, p)");
      }
    }
  }
  return std::make_shared<LinearOracle>(s);
}

std::shared_ptr<const RankOracle> build(const PartitionSpec& s) {
  check_size("partition.n", s.n);
  ElementSet seen;
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    const PartitionBlock& b = s.blocks[i];
    const std::string field = "partition.blocks[" + std::to_string(i) + "]";
    if (b.capacity < 0) invalid(field + ".capacity: must be non-negative");
    for (Element e : b.elements) {
      if (e < 0 || e >= s.n) invalid(field + ": element " + std::to_string(e) + " out of range");
      if (seen.contains(e)) invalid(field + ": element " + std::to_string(e) + " appears twice");
      seen.insert(e);
    }
  }
  if (seen != ElementSet::first(s.n)) {
    invalid("partition.blocks: do not cover elements " +
            (ElementSet::first(s.n) - seen).to_string());
  }
  return std::make_shared<PartitionOracle>(s);
}

}  // namespace
}  // namespace detail

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Matroid::Matroid(std::shared_ptr<const detail::RankOracle> base,
                 ElementSet ground, ElementSet contracted)
    : base_(std::move(base)), ground_(ground), contracted_(contracted) {
  contracted_rank_ = base_->rank(contracted_);
}

Matroid Matroid::construct(const FamilySpec& spec) {
  auto oracle = std::visit(
      [](const auto& s) -> std::shared_ptr<const detail::RankOracle> {
        return detail::build(s);
      },
      spec);
  const int n = oracle->size();
  return Matroid(std::move(oracle), ElementSet::first(n), ElementSet());
}

Matroid Matroid::uniform(int n, int r) { return construct(UniformSpec{n, r}); }

Matroid Matroid::graphic(int num_vertices,
                         std::vector<std::pair<int, int>> edges) {
  return construct(GraphicSpec{num_vertices, std::move(edges)});
}

Matroid Matroid::linear(std::uint32_t p,
                        std::vector<std::vector<std::uint32_t>> rows) {
  LinearSpec s;
  s.p = p;
  s.num_rows = static_cast<int>(rows.size());
  s.num_cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  s.rows = std::move(rows);
  return construct(s);
}

Matroid Matroid::partition(int n, std::vector<PartitionBlock> blocks) {
  return construct(PartitionSpec{n, std::move(blocks)});
}

int Matroid::base_size() const { return base_->size(); }

bool Matroid::is_minor() const {
  return !contracted_.empty() || ground_ != ElementSet::first(base_->size());
}

const FamilySpec& Matroid::base_spec() const { return base_->spec(); }

int Matroid::base_rank(ElementSet a) const { return base_->rank(a); }

int Matroid::rank(ElementSet a) const {
  if (!a.subset_of(ground_)) {
    throw ValidationError("rank: elements " + (a - ground_).to_string() +
                          " are not in the ground set");
  }
  if (contracted_.empty()) return base_rank(a);
  return base_rank(a | contracted_) - contracted_rank_;
}

Matroid Matroid::restriction(ElementSet s) const {
  if (!s.subset_of(ground_)) {
    throw ValidationError("restriction: elements " + (s - ground_).to_string() +
                          " are not in the ground set");
  }
  return Matroid(base_, s, contracted_);
}

Matroid Matroid::contraction(ElementSet c) const {
  if (!c.subset_of(ground_)) {
    throw ValidationError("contraction: elements " + (c - ground_).to_string() +
                          " are not in the ground set");
  }
  return Matroid(base_, ground_ - c, contracted_ | c);
}

ElementSet fundamental_circuit(const Matroid& m, ElementSet independent,
                               Element e) {
  if (!m.ground_set().contains(e)) {
    throw ValidationError("fundamental_circuit: element " + std::to_string(e) +
                          " is not in the ground set");
  }
  if (independent.contains(e)) {
    throw ValidationError("fundamental_circuit: element already in the set");
  }
  if (!m.is_independent(independent)) {
    throw ValidationError("fundamental_circuit: base set is dependent");
  }
  const ElementSet both = independent.with(e);
  const int r = m.rank(both);
  if (r == both.size()) throw ValidationError("fundamental_circuit: no circuit");
  ElementSet circuit;
  for (Element x : both) {
    if (m.rank(both.without(x)) == r) circuit.insert(x);
  }
  return circuit;
}

ElementSet closure(const Matroid& m, ElementSet a) {
  const int r = m.rank(a);
  ElementSet out = a;
  for (Element x : m.ground_set() - a) {
    if (m.rank(a.with(x)) == r) out.insert(x);
  }
  return out;
}

ElementSet loops(const Matroid& m) {
  ElementSet out;
  for (Element x : m.ground_set()) {
    if (m.rank(ElementSet::singleton(x)) == 0) out.insert(x);
  }
  return out;
}

}  // namespace micolor
