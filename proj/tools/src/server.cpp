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

#include <iostream>

#include "httplib.h"
#include "micolor/errors.hpp"
#include "micolor_cli/api.hpp"

namespace micolor::cli {

std::unique_ptr<httplib::Server> make_http_server(GameApi& api) {
  auto server_ptr = std::make_unique<httplib::Server>();
  httplib::Server& server = *server_ptr;
  auto dispatch = [&api](const httplib::Request& req, httplib::Response& res) {
    ApiResponse out = api.handle(req.method, req.path, req.body);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
  };
  server.Get(R"(/games/[^/]+)", dispatch);
  server.Post(R"(/games)", dispatch);
  server.Post(R"(/games/[^/]+/move)", dispatch);
  server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      res.set_content(R"({"error":"not found"})", "application/json");
    }
  });
  return server_ptr;
}

void serve(GameApi& api, const std::string& host, int port) {
  std::unique_ptr<httplib::Server> server = make_http_server(api);
  std::cerr << "serving on http://" << host << ':' << port << '\n';
  if (!server->listen(host, port)) {
    throw Error("cannot listen on " + host + ":" + std::to_string(port));
  }
}

}  // namespace micolor::cli
