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

#ifndef MICOLOR_CLI_HUMAN_BOB_HPP_
#define MICOLOR_CLI_HUMAN_BOB_HPP_

#include <istream>
#include <memory>
#include <ostream>

#include "micolor/strategy.hpp"

namespace micolor::cli {

// Bob played from a terminal. Prompts go to `out`; invalid answers are
// rejected and asked again. Throws micolor::Error when input runs out.
std::unique_ptr<BobStrategy> make_human_bob(std::istream& in, std::ostream& out);

}  // namespace micolor::cli

#endif  // MICOLOR_CLI_HUMAN_BOB_HPP_
