// Copyright 2026 The mgame Authors.
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

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mgame/cli.hpp"

namespace {

void add_common(CLI::App* sub, mgame::RunConfig& cfg) {
  sub->add_option("--measure", cfg.measure, "measure document (path or inline JSON)");
  sub->add_option("--payoff", cfg.payoff, "payoff document (path or inline JSON)");
  sub->add_option("--stake", cfg.stake, "stake s in [0, 1), e.g. 1/4");
  sub->add_option("--depth", cfg.depth, "depth cap (0 = from the payoff)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measure games: play, decide, verify, replay"};
  app.require_subcommand(1);
  mgame::RunConfig cfg;
  std::string out;

  auto* play = app.add_subcommand("play", "run the referee and write a trace");
  add_common(play, cfg);
  play->add_option("--strategy-i", cfg.strategy_i, "constructed | random[:SEED] | greedy[:MODE]");
  play->add_option("--strategy-ii", cfg.strategy_ii, "constructed | random[:SEED] | greedy[:MODE]");
  play->add_option("--variant", cfg.variant, "G or unfolded");
  play->add_option("--alphabet", cfg.alphabet, "digit alphabet size for the unfolded game");
  play->add_option("--seed", cfg.seed);

  auto* decide = app.add_subcommand("decide", "winner, strategy spec and certificate");
  add_common(decide, cfg);

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("--suite", cfg.suite)->required();
  verify->add_option("--cases", cfg.cases);
  verify->add_option("--depth", cfg.depth);
  verify->add_option("--horizon", cfg.horizon);
  verify->add_option("--rounds", cfg.rounds);
  verify->add_option("--grid-q,--Q", cfg.grid_q);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--adversaries", cfg.adversaries);

  auto* rep = app.add_subcommand("replay", "re-derive a trace file and compare bytes");
  rep->add_option("--trace", cfg.trace)->required();

  for (auto* sub : {play, decide, verify, rep}) sub->add_option("--out", out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : mgame::kExitInput;
  }

  mgame::CommandResult r;
  if (play->parsed()) {
    r = mgame::cmd_play(cfg);
  } else if (decide->parsed()) {
    r = mgame::cmd_decide(cfg);
  } else if (verify->parsed()) {
    r = mgame::cmd_verify(cfg);
  } else {
    r = mgame::cmd_replay(cfg);
  }

  if (!r.output.is_null()) {
    if (out.empty()) {
      std::cout << mgame::dump(r.output);
    } else {
      try {
        mgame::write_json_file(out, r.output);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return mgame::kExitInput;
      }
    }
  }
  if (!r.message.empty()) {
    (r.exit_code == mgame::kExitOk && !out.empty() ? std::cout : std::cerr) << r.message << '\n';
  }
  return r.exit_code;
}
