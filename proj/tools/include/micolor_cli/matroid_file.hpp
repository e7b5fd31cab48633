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

#ifndef MICOLOR_CLI_MATROID_FILE_HPP_
#define MICOLOR_CLI_MATROID_FILE_HPP_

#include <string>
#include <string_view>

#include "micolor/errors.hpp"
#include "micolor/matroid.hpp"

namespace micolor::cli {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Grammar (whitespace separated tokens, '#' starts a comment line):
//   uniform <n> <r>
//   graphic <nv> <ne>      then ne lines "<u> <v>"
//   linear <p> <rows> <cols> then rows lines of cols integers in [0, p)
//   partition <n> <nblocks> then nblocks lines "<cap> <e>..."
Matroid parse_matroid(std::string_view text);
Matroid load_matroid(const std::string& path);

// Inverse of parse_matroid for base (non-minor) matroids.
std::string print_matroid(const Matroid& m);

}  // namespace micolor::cli

#endif  // MICOLOR_CLI_MATROID_FILE_HPP_
