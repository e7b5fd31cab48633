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

#ifndef MICOLOR_ERRORS_HPP_
#define MICOLOR_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace micolor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A malformed matroid description or argument; the message names the field.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The game has no cover of its uncolored elements, so no strategy applies.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// A broken internal invariant. Seeing one means a bug in this library.
class InvariantError : public Error {
 public:
  using Error::Error;
};

class IllegalMove : public Error {
 public:
  IllegalMove(const std::string& what, std::vector<int> legal_colors)
      : Error(what), legal_colors_(std::move(legal_colors)) {}
  const std::vector<int>& legal_colors() const { return legal_colors_; }

 private:
  std::vector<int> legal_colors_;
};

}  // namespace micolor

#endif  // MICOLOR_ERRORS_HPP_
