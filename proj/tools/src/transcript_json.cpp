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

#include "micolor_cli/transcript_json.hpp"

#include "micolor/errors.hpp"

namespace micolor::cli {

namespace {

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) {
    throw ValidationError(std::string("transcript: missing field '") + name + "'");
  }
  return obj.at(name);
}

int int_field(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  if (!v.is_number_integer()) {
    throw ValidationError(std::string("transcript: field '") + name + "' must be an integer");
  }
  return v.get<int>();
}

Role role_field(const Json& obj, const char* name) {
  const Json& v = field(obj, name);
  std::optional<Role> role = v.is_string() ? parse_role(v.get<std::string>()) : std::nullopt;
  if (!role) {
    throw ValidationError(std::string("transcript: field '") + name +
                          "' must be \"alice\" or \"bob\"");
  }
  return *role;
}

}  // namespace

Json round_to_json(const Round& round) {
  Json j;
  j["round"] = round.number;
  j["indicator"] = std::string(to_string(round.indicator));
  j["element"] = round.element;
  j["colorist"] = std::string(to_string(round.colorist));
  j["color"] = round.color;
  return j;
}

Json transcript_to_json(const Transcript& transcript) {
  Json j;
  j["colors"] = transcript.colors;
  j["mode"] = std::string(to_string(transcript.mode));
  j["rounds"] = Json::array();
  for (const Round& r : transcript.rounds) j["rounds"].push_back(round_to_json(r));
  j["winner"] = std::string(to_string(transcript.winner));
  return j;
}

Transcript transcript_from_json(const Json& doc) {
  Transcript t;
  t.colors = int_field(doc, "colors");
  const Json& mode = field(doc, "mode");
  std::optional<Mode> parsed = mode.is_string() ? parse_mode(mode.get<std::string>()) : std::nullopt;
  if (!parsed) throw ValidationError("transcript: field 'mode' must be \"classic\" or \"modified\"");
  t.mode = *parsed;
  const Json& rounds = field(doc, "rounds");
  if (!rounds.is_array()) throw ValidationError("transcript: field 'rounds' must be an array");
  for (const Json& r : rounds) {
    t.rounds.push_back(Round{int_field(r, "round"), role_field(r, "indicator"),
                             int_field(r, "element"), role_field(r, "colorist"),
                             int_field(r, "color")});
  }
  t.winner = role_field(doc, "winner");
  return t;
}

}  // namespace micolor::cli
