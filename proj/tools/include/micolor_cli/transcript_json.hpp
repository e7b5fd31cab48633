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

#ifndef MICOLOR_CLI_TRANSCRIPT_JSON_HPP_
#define MICOLOR_CLI_TRANSCRIPT_JSON_HPP_

#include <string>

#include "json.hpp"
#include "micolor/game.hpp"

namespace micolor::cli {

// Keys keep the documented order.
using Json = nlohmann::ordered_json;

Json round_to_json(const Round& round);
Json transcript_to_json(const Transcript& transcript);

// Throws ValidationError on missing or mistyped fields. Replaying is left
// to the caller, which knows the matroids.
Transcript transcript_from_json(const Json& doc);

}  // namespace micolor::cli

#endif  // MICOLOR_CLI_TRANSCRIPT_JSON_HPP_
