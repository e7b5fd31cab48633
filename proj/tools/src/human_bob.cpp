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

#include "micolor_cli/human_bob.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "micolor/errors.hpp"
#include "micolor/game.hpp"

namespace micolor::cli {

namespace {

class HumanBob final : public BobStrategy {
 public:
  HumanBob(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  MoveKind choose_kind(const GameState& state) override {
    show(state);
    const int kind = ask("move kind (1 = alice indicates, 2 = you indicate)",
                         [](int v) { return v == 1 || v == 2; });
    return static_cast<MoveKind>(kind);
  }

  Element indicate(const GameState& state) override {
    const ElementSet open = state.uncolored();
    return ask("element to indicate " + open.to_string(),
               [open](int v) { return open.contains(v); });
  }

  int color(const GameState& state, Element e) override {
    if (state.mode() == Mode::kClassic) show(state);
    const std::vector<int> legal = legal_colors(state, e);
    std::string options;
    for (int c : legal) options += (options.empty() ? "" : ",") + std::to_string(c);
    out_ << to_string(state.indicator()) << " indicated element " << e << '\n';
    return ask("color for element " + std::to_string(e) + " {" + options + "}",
               [&legal](int v) { return std::find(legal.begin(), legal.end(), v) != legal.end(); });
  }

 private:
  void show(const GameState& state) {
    out_ << "uncolored: " << state.uncolored().to_string() << '\n';
    for (int c = 1; c <= state.colors(); ++c) {
      out_ << "  color " << c << ": " << state.color_class(c).to_string() << '\n';
    }
  }

  template <typename Valid>
  int ask(const std::string& prompt, Valid&& valid) {
    while (true) {
      out_ << prompt << "> " << std::flush;
      std::string line;
      if (!std::getline(in_, line)) throw Error("input closed");
      std::istringstream words(line);
      int value = 0;
      std::string rest;
      if (words >> value && !(words >> rest) && valid(value)) return value;
      out_ << "invalid answer '" << line << "'\n";
    }
  }

  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

std::unique_ptr<BobStrategy> make_human_bob(std::istream& in, std::ostream& out) {
  return std::make_unique<HumanBob>(in, out);
}

}  // namespace micolor::cli
