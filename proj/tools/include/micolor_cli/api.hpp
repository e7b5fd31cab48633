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

#ifndef MICOLOR_CLI_API_HPP_
#define MICOLOR_CLI_API_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "micolor/game.hpp"
#include "micolor/strategy.hpp"
#include "micolor_cli/transcript_json.hpp"

namespace httplib {
class Server;
}

namespace micolor::cli {

struct ApiResponse {
  int status = 200;
  Json body;
};

// One game between a human Bob and the engine Alice. Alice's own actions
// are played as soon as it is her turn, so the session always rests on a
// human decision or a finished game.
class GameSession {
 public:
  GameSession(const Matroid& matroid, int colors, Mode mode);

  Json view() const;
  // {"color": c} | {"element": e} | {"kind": 1|2}
  ApiResponse move(const Json& body);

  const GameState& state() const { return state_; }

 private:
  void advance();

  GameState state_;
  std::unique_ptr<AliceStrategy> alice_;
};

std::string_view awaiting_label(const GameState& state);

// Transport-independent request handling for the HTTP API:
//   POST /games               -> 201 {"id"}
//   GET  /games/{id}          -> game view
//   POST /games/{id}/move     -> game view after the move
// Mutations of one game are serialized; different games proceed in parallel.
class GameApi {
 public:
  ApiResponse handle(std::string_view method, std::string_view path,
                     std::string_view body);

 private:
  struct Entry {
    std::mutex mutex;
    std::unique_ptr<GameSession> session;
  };

  ApiResponse create(std::string_view body);
  std::shared_ptr<Entry> find(const std::string& id);

  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> games_;
  long next_id_ = 1;
};

// HTTP front end for `api`; the caller binds and listens.
std::unique_ptr<httplib::Server> make_http_server(GameApi& api);

// Blocks serving `api` over HTTP until the process is stopped.
void serve(GameApi& api, const std::string& host, int port);

}  // namespace micolor::cli

#endif  // MICOLOR_CLI_API_HPP_
