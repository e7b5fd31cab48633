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

#include "micolor_cli/matroid_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace micolor::cli {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::istringstream words(raw);
    Line line{number, {}};
    std::string word;
    while (words >> word) line.tokens.push_back(word);
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

long long to_integer(const Line& line, const std::string& token, const char* what) {
  long long value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line.number, std::string(what) + ": expected an integer, got '" + token + "'");
  }
  return value;
}

int to_int(const Line& line, const std::string& token, const char* what) {
  const long long v = to_integer(line, token, what);
  if (v < -(1LL << 31) || v > (1LL << 31)) {
    throw ParseError(line.number, std::string(what) + ": value out of range");
  }
  return static_cast<int>(v);
}

void expect_arity(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, std::string(what) + ": expected " +
                                      std::to_string(count) + " values, got " +
                                      std::to_string(line.tokens.size()));
  }
}

class Reader {
 public:
  explicit Reader(std::vector<Line> lines) : lines_(std::move(lines)) {}

  const Line& next(const char* what) {
    if (at_ >= lines_.size()) {
      const int last = lines_.empty() ? 0 : lines_.back().number;
      throw ParseError(last + 1, std::string("unexpected end of input, expected ") + what);
    }
    return lines_[at_++];
  }

  void finish() const {
    if (at_ < lines_.size()) {
      throw ParseError(lines_[at_].number, "unexpected trailing content");
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t at_ = 0;
};

FamilySpec read_spec(Reader& reader) {
  const Line& header = reader.next("a header");
  const std::string& kind = header.tokens.front();
  if (kind == "uniform") {
    expect_arity(header, 3, "uniform header");
    return UniformSpec{to_int(header, header.tokens[1], "n"),
                       to_int(header, header.tokens[2], "r")};
  }
  if (kind == "graphic") {
    expect_arity(header, 3, "graphic header");
    GraphicSpec spec;
    spec.num_vertices = to_int(header, header.tokens[1], "nv");
    const int ne = to_int(header, header.tokens[2], "ne");
    if (ne < 0 || ne > kMaxElements) {
      throw ParseError(header.number, "ne: must be in [0, " + std::to_string(kMaxElements) + "]");
    }
    for (int i = 0; i < ne; ++i) {
      const Line& edge = reader.next("an edge line");
      expect_arity(edge, 2, "edge");
      const int u = to_int(edge, edge.tokens[0], "u");
      const int v = to_int(edge, edge.tokens[1], "v");
      if (u < 0 || u >= spec.num_vertices || v < 0 || v >= spec.num_vertices) {
        throw ParseError(edge.number, "edge endpoint out of range [0, " +
                                          std::to_string(spec.num_vertices) + ")");
      }
      spec.edges.emplace_back(u, v);
    }
    return spec;
  }
  if (kind == "linear") {
    expect_arity(header, 4, "linear header");
    LinearSpec spec;
    const long long p = to_integer(header, header.tokens[1], "p");
    if (p < 2 || p > (1LL << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
      throw ParseError(header.number, "p: " + header.tokens[1] + " is not a prime at most 2^31");
    }
    spec.p = static_cast<std::uint32_t>(p);
    spec.num_rows = to_int(header, header.tokens[2], "rows");
    spec.num_cols = to_int(header, header.tokens[3], "cols");
    if (spec.num_rows < 0 || spec.num_cols < 0 || spec.num_cols > kMaxElements) {
      throw ParseError(header.number, "rows/cols: out of range");
    }
    // Rows of zero columns are blank lines, which the tokenizer drops.
    if (spec.num_cols == 0) spec.rows.assign(spec.num_rows, {});
    for (int r = 0; r < spec.num_rows && spec.num_cols > 0; ++r) {
      const Line& row = reader.next("a matrix row");
      expect_arity(row, static_cast<std::size_t>(spec.num_cols), "matrix row");
      std::vector<std::uint32_t> values;
      for (const std::string& t : row.tokens) {
        const long long v = to_integer(row, t, "entry");
        if (v < 0 || v >= p) {
          throw ParseError(row.number, "entry " + t + " not in [0, " + std::to_string(p) + ")");
        }
        values.push_back(static_cast<std::uint32_t>(v));
      }
      spec.rows.push_back(std::move(values));
    }
    return spec;
  }
  if (kind == "partition") {
    expect_arity(header, 3, "partition header");
    PartitionSpec spec;
    spec.n = to_int(header, header.tokens[1], "n");
    const int nblocks = to_int(header, header.tokens[2], "nblocks");
    if (nblocks < 0 || nblocks > kMaxElements) {
      throw ParseError(header.number, "nblocks: out of range");
    }
    ElementSet seen;
    for (int b = 0; b < nblocks; ++b) {
      const Line& line = reader.next("a block line");
      PartitionBlock block;
      block.capacity = to_int(line, line.tokens[0], "cap");
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        const int e = to_int(line, line.tokens[i], "element");
        if (e < 0 || e >= spec.n) {
          throw ParseError(line.number, "element " + line.tokens[i] + " out of range");
        }
        if (seen.contains(e)) {
          throw ParseError(line.number, "element " + line.tokens[i] + " listed twice");
        }
        seen.insert(e);
        block.elements.push_back(e);
      }
      spec.blocks.push_back(std::move(block));
    }
    if (spec.n >= 0 && spec.n <= kMaxElements && seen != ElementSet::first(spec.n)) {
      throw ParseError(header.number, "blocks do not partition the elements; missing " +
                                          (ElementSet::first(spec.n) - seen).to_string());
    }
    return spec;
  }
  throw ParseError(header.number, "unknown header '" + kind + "'");
}

}  // namespace

Matroid parse_matroid(std::string_view text) {
  std::vector<Line> lines = tokenize(text);
  const int header_line = lines.empty() ? 1 : lines.front().number;
  Reader reader(std::move(lines));
  FamilySpec spec = read_spec(reader);
  reader.finish();
  try {
    return Matroid::construct(spec);
  } catch (const ValidationError& e) {
    throw ParseError(header_line, e.what());
  }
}

Matroid load_matroid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_matroid(text.str());
}

std::string print_matroid(const Matroid& m) {
  std::ostringstream out;
  std::visit(
      [&out](const auto& spec) {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, UniformSpec>) {
          out << "uniform " << spec.n << ' ' << spec.r << '\n';
        } else if constexpr (std::is_same_v<T, GraphicSpec>) {
          out << "graphic " << spec.num_vertices << ' ' << spec.edges.size() << '\n';
          for (auto [u, v] : spec.edges) out << u << ' ' << v << '\n';
        } else if constexpr (std::is_same_v<T, LinearSpec>) {
          out << "linear " << spec.p << ' ' << spec.num_rows << ' ' << spec.num_cols << '\n';
          for (const auto& row : spec.rows) {
            if (row.empty()) continue;
            for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
            out << '\n';
          }
        } else {
          out << "partition " << spec.n << ' ' << spec.blocks.size() << '\n';
          for (const PartitionBlock& b : spec.blocks) {
            out << b.capacity;
            for (Element e : b.elements) out << ' ' << e;
            out << '\n';
          }
        }
      },
      m.base_spec());
  return out.str();
}

}  // namespace micolor::cli
