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

#ifndef MICOLOR_CLI_COMMANDS_HPP_
#define MICOLOR_CLI_COMMANDS_HPP_

#include <istream>
#include <ostream>

namespace micolor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 2;
inline constexpr int kExitBobWins = 3;

// Entry point of the micolor tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace micolor::cli

#endif  // MICOLOR_CLI_COMMANDS_HPP_
