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

#ifndef MGAME_CLI_HPP_
#define MGAME_CLI_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "mgame/io.hpp"
#include "mgame/suites.hpp"

namespace mgame {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::string command;
  // Documents or inline JSON ("{...}"); see load_document.
  std::string measure = R"({"format": "mgame.measure/1", "kind": "fair"})";
  std::string payoff;
  std::string stake = "0/1";
  std::string variant = "G";
  int alphabet = 2;
  std::size_t depth = 0;
  std::size_t horizon = 0;
  std::size_t rounds = 0;
  std::size_t cases = 0;
  int grid_q = 0;
  std::optional<std::uint64_t> seed;
  std::size_t adversaries = 0;
  std::string suite;
  std::string strategy_i = "constructed";
  std::string strategy_ii = "constructed";
  std::string trace;
};

struct CommandResult {
  int exit_code = kExitOk;
  // One-line summary for the terminal.
  std::string message;
  // Document to write to --out (or stdout).
  Json output;
};

// A file path, or inline JSON when the text starts with '{'. The document
// must carry "format": "mgame.<kind>/1".
Json load_document(const std::string& source, std::string_view kind);
// Stake in [0, 1); throws std::invalid_argument otherwise.
Rational parse_stake(const std::string& text);

// Strategy specs: constructed | random[:SEED] | greedy[:MODE]. I modes are
// proportional, extreme; II modes are most-a, thinnest.
StrategyIPtr make_strategy_I(const std::string& spec, const DyadicMeasure& mu, const SetExpr& a,
                             const Rational& s, std::uint64_t seed);
StrategyIIPtr make_strategy_II(const std::string& spec, const DyadicMeasure& mu,
                               const SetExpr& a, const Rational& s, std::uint64_t seed);

// Input problems come back as kExitInput with the message set.
CommandResult cmd_play(const RunConfig& cfg);
CommandResult cmd_decide(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
// Re-derives a trace file; passes when the re-serialized replay matches the
// file byte for byte.
CommandResult cmd_replay(const RunConfig& cfg);

}  // namespace mgame

#endif  // MGAME_CLI_HPP_
