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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mgame/cli.hpp"

using namespace mgame;

namespace {

const char* kOne = R"({"format": "mgame.payoff/1", "set": {"kind": "clopen", "antichain": ["1"]}})";

RunConfig config(const std::string& payoff, const std::string& stake) {
  RunConfig c;
  c.payoff = payoff;
  c.stake = stake;
  return c;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "mgame_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: play constructed I against greedy II") {
  RunConfig c = config(kOne, "1/4");
  c.strategy_ii = "greedy";
  const CommandResult r = cmd_play(c);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.output["format"] == "mgame.trace/1");
  CHECK(r.output["outcome"] == "I-decided");
}

TEST_CASE("cli: stake 1 is an input error") {
  const CommandResult r = cmd_play(config(kOne, "1"));
  CHECK(r.exit_code == kExitInput);
  CHECK(r.message.find("stake") != std::string::npos);
  CHECK(cmd_play(config(kOne, "-1/2")).exit_code == kExitInput);
  CHECK(cmd_play(config(kOne, "abc")).exit_code == kExitInput);
}

TEST_CASE("cli: missing or malformed documents") {
  CHECK(cmd_play(config("", "1/4")).exit_code == kExitInput);
  CHECK(cmd_play(config(R"({"set": {"kind": "clopen", "antichain": ["1"]}})", "1/4")).exit_code ==
        kExitInput);
  CHECK(cmd_play(config("/nonexistent/payoff.json", "1/4")).exit_code == kExitInput);
  RunConfig c = config(kOne, "1/4");
  c.strategy_i = "telepathic";
  CHECK(cmd_play(c).exit_code == kExitInput);
  c = config(kOne, "1/2");
  CHECK(cmd_play(c).exit_code == kExitInput);  // I does not win, no constructed I
}

TEST_CASE("cli: replay of an emitted trace is byte-identical") {
  for (const std::string variant : {"G", "unfolded"}) {
    for (const std::string two : {"random:7", "greedy:thinnest", "greedy:most-a"}) {
      RunConfig c = config(kOne, "1/4");
      c.variant = variant;
      c.strategy_ii = two;
      const CommandResult played = cmd_play(c);
      REQUIRE(played.exit_code == kExitOk);
      const auto path = scratch("trace_" + variant + ".json");
      write_json_file(path.string(), played.output);
      RunConfig rc;
      rc.trace = path.string();
      const CommandResult again = cmd_replay(rc);
      CHECK(again.exit_code == kExitOk);
      CHECK(dump(again.output) == slurp(path));
    }
  }
}

TEST_CASE("cli: replay flags an edited trace") {
  RunConfig c = config(kOne, "1/4");
  c.strategy_ii = "greedy";
  const CommandResult played = cmd_play(c);
  std::string text = dump(played.output);
  const auto at = text.find("\"outcome\": \"I-decided\"");
  REQUIRE(at != std::string::npos);
  text.replace(at, 22, "\"outcome\": \"undecided\"");
  const auto path = scratch("edited.json");
  std::ofstream(path, std::ios::binary) << text;
  RunConfig rc;
  rc.trace = path.string();
  CHECK(cmd_replay(rc).exit_code == kExitFailure);
}

TEST_CASE("cli: decide") {
  CommandResult r = cmd_decide(config(kOne, "1/4"));
  CHECK(r.exit_code == kExitOk);
  CHECK(r.output["winner"] == "I");
  CHECK(r.output["complement_mass"] == "1/2");
  CHECK(r.output["strategy"]["kind"] == "closed_I");
  CHECK(r.output["certificate"]["player"] == "I");

  r = cmd_decide(config(kOne, "1/2"));
  CHECK(r.output["winner"] == "II");
  CHECK(r.output["certificate"]["player"] == "II");

  RunConfig c = config(
      R"({"format": "mgame.payoff/1", "set": {"kind": "complement",
          "arg": {"kind": "clopen", "antichain": ["11"]}}})",
      "1/10");
  c.measure = R"({"format": "mgame.measure/1", "kind": "bernoulli", "p": "1/3"})";
  r = cmd_decide(c);
  CHECK(r.output["winner"] == "I");
  CHECK(r.output["complement_mass"] == "1/9");

  r = cmd_decide(config(
      R"({"format": "mgame.payoff/1", "set": {"kind": "contains_substring", "pattern": "11"}})",
      "1/4"));
  CHECK(r.exit_code == kExitInput);
  CHECK(r.message.find("unsupported payoff") != std::string::npos);
}

TEST_CASE("cli: decided strategy spec plays back") {
  for (const std::string stake : {"1/4", "1/2"}) {
    const CommandResult d = cmd_decide(config(kOne, stake));
    RunConfig c = config(kOne, stake);
    const bool one_wins = d.output["winner"] == "I";
    if (one_wins) {
      c.strategy_i = d.output["strategy"].dump();
      c.strategy_ii = "random:11";
    } else {
      c.strategy_i = "random:11";
      c.strategy_ii = d.output["strategy"].dump();
    }
    const CommandResult p = cmd_play(c);
    CHECK(p.exit_code == kExitOk);
    CHECK(p.output["outcome"] == std::string(one_wins ? "I-decided" : "II-decided"));
  }
}

TEST_CASE("cli: verify") {
  RunConfig c;
  c.suite = "nope";
  CHECK(cmd_verify(c).exit_code == kExitInput);
  c.suite = "numsplit";
  c.cases = 200;
  const CommandResult r = cmd_verify(c);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.output["format"] == "mgame.suite_report/1");
}
