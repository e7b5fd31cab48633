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

#include "micolor_cli/api.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "micolor/alice.hpp"
#include "micolor/errors.hpp"
#include "micolor_cli/matroid_file.hpp"

namespace micolor::cli {

namespace {

ApiResponse error(int status, const std::string& message) {
  return {status, Json{{"error", message}}};
}

std::vector<std::string> split_path(std::string_view path) {
  std::vector<std::string> parts;
  std::size_t at = 0;
  while (at < path.size()) {
    std::size_t slash = path.find('/', at);
    if (slash == std::string_view::npos) slash = path.size();
    if (slash > at) parts.emplace_back(path.substr(at, slash - at));
    at = slash + 1;
  }
  return parts;
}

}  // namespace

std::string_view awaiting_label(const GameState& state) {
  switch (state.awaiting()) {
    case Awaiting::kKind:
      return "human_kind";
    case Awaiting::kIndication:
      return "human_indication";
    case Awaiting::kColor:
      return "human_color";
    case Awaiting::kFinished:
      return "finished";
  }
  return "finished";
}

GameSession::GameSession(const Matroid& matroid, int colors, Mode mode)
    : state_(new_game(matroid, colors, mode)), alice_(make_engine_alice(state_)) {
  advance();
}

void GameSession::advance() {
  while (!state_.finished()) {
    const Awaiting next = state_.awaiting();
    if (next == Awaiting::kIndication && state_.indicator() == Role::kAlice) {
      state_ = indicate(state_, alice_->indicate(state_));
    } else if (next == Awaiting::kColor && state_.colorist() == Role::kAlice) {
      const Element e = *state_.indicated();
      state_ = apply(state_, e, alice_->color(state_, e));
      alice_->observe(state_, state_.rounds().back());
    } else {
      return;
    }
  }
}

Json GameSession::view() const {
  Json j;
  Json uncolored = Json::array();
  for (Element e : state_.uncolored()) uncolored.push_back(e);
  j["uncolored"] = uncolored;
  Json coloring = Json::object();
  for (Element e : state_.colored()) coloring[std::to_string(e)] = state_.color_of(e);
  j["coloring"] = coloring;
  j["indicated"] = state_.indicated() ? Json(*state_.indicated()) : Json(nullptr);
  Json legal = Json::array();
  if (state_.awaiting() == Awaiting::kColor) {
    for (int c : legal_colors(state_, *state_.indicated())) legal.push_back(c);
  }
  j["legal_colors"] = legal;
  j["awaiting"] = std::string(awaiting_label(state_));
  j["winner"] = state_.winner() ? Json(std::string(to_string(*state_.winner()))) : Json(nullptr);
  Json rounds = Json::array();
  for (const Round& r : state_.rounds()) rounds.push_back(round_to_json(r));
  j["rounds"] = rounds;
  return j;
}

ApiResponse GameSession::move(const Json& body) {
  if (!body.is_object()) return error(400, "move body must be a JSON object");
  const int given = static_cast<int>(body.contains("color")) +
                    static_cast<int>(body.contains("element")) +
                    static_cast<int>(body.contains("kind"));
  if (given != 1) return error(400, "move needs exactly one of color, element, kind");
  const char* key = body.contains("color") ? "color" : body.contains("element") ? "element" : "kind";
  if (!body[key].is_number_integer()) {
    return error(400, std::string("'") + key + "' must be an integer");
  }
  const int value = body[key].get<int>();
  const Awaiting awaiting = state_.awaiting();
  if (awaiting == Awaiting::kFinished) return error(409, "game is finished");

  const std::string k = key;
  if (k == "kind") {
    if (awaiting != Awaiting::kKind) return error(409, "a move kind is not expected now");
    if (value != 1 && value != 2) return error(400, "kind must be 1 or 2");
    state_ = choose_kind(state_, static_cast<MoveKind>(value));
  } else if (k == "element") {
    if (awaiting != Awaiting::kIndication) return error(409, "an indication is not expected now");
    if (!state_.uncolored().contains(value)) {
      ApiResponse r = error(400, "element " + std::to_string(value) + " is not uncolored");
      r.body["uncolored"] = state_.uncolored().to_vector();
      return r;
    }
    state_ = indicate(state_, value);
  } else {
    if (awaiting != Awaiting::kColor) return error(409, "a color is not expected now");
    const Element e = *state_.indicated();
    const std::vector<int> legal = legal_colors(state_, e);
    if (std::find(legal.begin(), legal.end(), value) == legal.end()) {
      ApiResponse r = error(400, "color " + std::to_string(value) + " is not legal for element " +
                                     std::to_string(e));
      r.body["legal_colors"] = legal;
      return r;
    }
    state_ = apply(state_, e, value);
    alice_->observe(state_, state_.rounds().back());
  }
  advance();
  return {200, view()};
}

ApiResponse GameApi::handle(std::string_view method, std::string_view path,
                            std::string_view body) {
  const std::vector<std::string> parts = split_path(path);
  if (parts.empty() || parts[0] != "games" || parts.size() > 3) return error(404, "not found");
  if (parts.size() == 1) {
    if (method != "POST") return error(405, "method not allowed");
    return create(body);
  }
  if (parts.size() == 3 && parts[2] != "move") return error(404, "not found");
  std::shared_ptr<Entry> entry = find(parts[1]);
  if (!entry) return error(404, "unknown game id '" + parts[1] + "'");
  std::lock_guard<std::mutex> lock(entry->mutex);
  if (parts.size() == 2) {
    if (method != "GET") return error(405, "method not allowed");
    return {200, entry->session->view()};
  }
  if (method != "POST") return error(405, "method not allowed");
  Json parsed = Json::parse(body, nullptr, false);
  if (parsed.is_discarded()) return error(400, "body is not valid JSON");
  return entry->session->move(parsed);
}

ApiResponse GameApi::create(std::string_view body) {
  Json req = Json::parse(body, nullptr, false);
  if (req.is_discarded() || !req.is_object()) return error(400, "body must be a JSON object");
  if (!req.contains("matroid") || !req["matroid"].is_string()) {
    return error(400, "'matroid' must be the text of a matroid file");
  }
  if (!req.contains("colors") || !req["colors"].is_number_integer()) {
    return error(400, "'colors' must be an integer");
  }
  const int colors = req["colors"].get<int>();
  if (colors < 1 || colors > kMaxElements) return error(400, "'colors' must be in [1, 64]");
  Mode mode = Mode::kClassic;
  if (req.contains("mode")) {
    std::optional<Mode> m =
        req["mode"].is_string() ? parse_mode(req["mode"].get<std::string>()) : std::nullopt;
    if (!m) return error(400, "'mode' must be \"classic\" or \"modified\"");
    mode = *m;
  }
  if (req.contains("human_role") && req["human_role"] != "bob") {
    return error(400, "'human_role' must be \"bob\"");
  }
  std::unique_ptr<GameSession> session;
  try {
    session = std::make_unique<GameSession>(
        parse_matroid(req["matroid"].get<std::string>()), colors, mode);
  } catch (const Error& e) {
    return error(400, e.what());
  }
  std::lock_guard<std::mutex> lock(mutex_);
  const std::string id = std::to_string(next_id_++);
  auto entry = std::make_shared<Entry>();
  entry->session = std::move(session);
  games_.emplace(id, std::move(entry));
  return {201, Json{{"id", id}}};
}

std::shared_ptr<GameApi::Entry> GameApi::find(const std::string& id) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = games_.find(id);
  return it == games_.end() ? nullptr : it->second;
}

}  // namespace micolor::cli
