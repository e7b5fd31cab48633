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

#include "micolor_cli/commands.hpp"

#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "micolor/alice.hpp"
#include "micolor/bob.hpp"
#include "micolor/errors.hpp"
#include "micolor/oracle.hpp"
#include "micolor/play.hpp"
#include "micolor/union.hpp"
#include "micolor_cli/api.hpp"
#include "micolor_cli/human_bob.hpp"
#include "micolor_cli/matroid_file.hpp"
#include "micolor_cli/transcript_json.hpp"

namespace micolor::cli {

namespace {

struct MatroidArgs {
  std::string matroid;
  int colors = 0;
  std::vector<std::string> matroids;
};

void add_matroid_args(CLI::App& cmd, MatroidArgs& args) {
  cmd.add_option("--matroid", args.matroid, "Matroid file; played with --colors copies");
  cmd.add_option("--colors", args.colors, "Number of colors");
  cmd.add_option("--matroids", args.matroids,
                 "One matroid file per color (generalized game); repeatable")
      ->take_all();
}

std::vector<Matroid> load_game_matroids(const MatroidArgs& args) {
  const bool single = !args.matroid.empty();
  const bool many = !args.matroids.empty();
  if (single == many) {
    throw ValidationError("give exactly one of --matroid with --colors, or --matroids");
  }
  if (single) {
    if (args.colors < 1) throw ValidationError("--colors must be at least 1");
    return std::vector<Matroid>(args.colors, load_matroid(args.matroid));
  }
  if (args.colors != 0 && args.colors != static_cast<int>(args.matroids.size())) {
    throw ValidationError("--colors disagrees with the number of --matroids");
  }
  std::vector<Matroid> out;
  for (const std::string& path : args.matroids) out.push_back(load_matroid(path));
  return out;
}

int cmd_chromatic(const std::string& path, std::ostream& out) {
  out << chromatic_number(load_matroid(path)) << '\n';
  return kExitOk;
}

struct PlayArgs {
  MatroidArgs game;
  bool modified = false;
  std::string alice = "engine";
  std::string bob = "random";
  std::uint64_t seed = 0;
  std::string transcript;
};

int cmd_play(const PlayArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<Matroid> matroids = load_game_matroids(args.game);
  const Mode mode = args.modified ? Mode::kModified : Mode::kClassic;
  const std::optional<AlicePolicy> alice_policy = parse_alice_policy(args.alice);
  if (!alice_policy) throw ValidationError("--alice must be engine or naive");

  Transcript transcript;
  if (args.bob == "human") {
    GameState state = new_game(matroids, mode);
    std::unique_ptr<AliceStrategy> alice = *alice_policy == AlicePolicy::kEngine
                                               ? make_engine_alice(state)
                                               : make_naive_alice();
    std::unique_ptr<BobStrategy> bob = make_human_bob(in, err);
    GameState final_state = play_out(std::move(state), *alice, *bob);
    err << "winner: " << to_string(*final_state.winner()) << '\n';
    transcript = make_transcript(final_state);
    replay(matroids, transcript);
  } else {
    const std::optional<BobPolicy> bob_policy = parse_bob_policy(args.bob);
    if (!bob_policy) throw ValidationError("--bob must be random, first-fit, adversarial or human");
    transcript = run_game({matroids, mode, *alice_policy, *bob_policy, args.seed});
  }
  const std::string doc = transcript_to_json(transcript).dump(2);
  out << doc << '\n';
  if (!args.transcript.empty()) {
    std::ofstream file(args.transcript);
    if (!file) throw Error("cannot write " + args.transcript);
    file << doc << '\n';
  }
  return transcript.winner == Role::kAlice ? kExitOk : kExitBobWins;
}

int cmd_solve(const MatroidArgs& args, bool modified, std::ostream& out) {
  std::vector<Matroid> matroids = load_game_matroids(args);
  const Role winner = modified ? oracle::solve_modified(matroids)
                               : oracle::solve_indicated(matroids);
  out << to_string(winner) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Indicated coloring games on matroids"};
  app.require_subcommand(1);

  std::string chromatic_file;
  CLI::App* chromatic = app.add_subcommand("chromatic", "Print the chromatic number");
  chromatic->add_option("file", chromatic_file, "Matroid file")->required();

  PlayArgs play_args;
  CLI::App* play = app.add_subcommand("play", "Play one game and print its transcript");
  add_matroid_args(*play, play_args.game);
  play->add_flag("--modified", play_args.modified, "Bob chooses the move kind each round");
  play->add_option("--alice", play_args.alice, "engine | naive");
  play->add_option("--bob", play_args.bob, "random | first-fit | adversarial | human");
  play->add_option("--seed", play_args.seed, "Seed for the random Bob");
  play->add_option("--transcript", play_args.transcript, "Also write the transcript here");

  MatroidArgs solve_args;
  bool solve_modified = false;
  CLI::App* solve = app.add_subcommand("solve", "Winner under optimal play (exhaustive)");
  add_matroid_args(*solve, solve_args);
  solve->add_flag("--modified", solve_modified, "Solve the modified game");

  int port = 8080;
  std::string host = "127.0.0.1";
  CLI::App* serve_cmd = app.add_subcommand("serve", "Serve the HTTP game API");
  serve_cmd->add_option("--port", port, "TCP port");
  serve_cmd->add_option("--host", host, "Address to bind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitError;
  }

  try {
    if (chromatic->parsed()) return cmd_chromatic(chromatic_file, out);
    if (play->parsed()) return cmd_play(play_args, in, out, err);
    if (solve->parsed()) return cmd_solve(solve_args, solve_modified, out);
    if (serve_cmd->parsed()) {
      GameApi api;
      serve(api, host, port);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace micolor::cli
