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

#ifndef MGAME_REFEREE_HPP_
#define MGAME_REFEREE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mgame/game.hpp"
#include "mgame/pair_tree.hpp"
#include "mgame/set_expr.hpp"
#include "mgame/strategy.hpp"

namespace mgame {

// II's winning set: a set of sequences (for G2 a set over interleaved pairs)
// or, for the unfolded game, a closed set of (x, y) pairs.
class Payoff {
 public:
  static Payoff of_set(SetExpr set) { return Payoff(std::move(set), std::nullopt); }
  static Payoff of_pairs(PairTree tree) { return Payoff(SetExpr::full(), std::move(tree)); }

  bool is_pairs() const { return tree_.has_value(); }
  const SetExpr& set() const { return set_; }
  const PairTree& pairs() const { return *tree_; }

  Cover classify(const Position& pos) const;
  std::string describe() const;

 private:
  Payoff(SetExpr set, std::optional<PairTree> tree) : set_(std::move(set)), tree_(std::move(tree)) {}
  SetExpr set_;
  std::optional<PairTree> tree_;
};

enum class Outcome { kIDecided, kIIDecided, kUndecided };
std::string outcome_name(Outcome o);
Outcome parse_outcome(const std::string& s);

struct AuditEntry {
  std::size_t round = 0;
  bool ok = true;
  // Empty when ok; otherwise "I:<rule>" or "II:<rule>".
  std::string rule;
  std::string detail;
  friend bool operator==(const AuditEntry&, const AuditEntry&) = default;
};

struct Trace {
  Position start;
  Payoff payoff = Payoff::of_set(SetExpr::full());
  std::string strategy_i;
  std::string strategy_ii;
  std::size_t depth_limit = 0;
  std::vector<Round> moves;
  std::vector<AuditEntry> audit;
  Outcome outcome = Outcome::kUndecided;
  // Round count at which the outcome was fixed.
  std::size_t final_depth = 0;
  // Set when the run ended on a rule violation or resignation.
  std::optional<std::string> violation;
  // The offending round of a violation, as far as it was played.
  std::optional<MoveI> rejected_offer;
  std::optional<MoveII> rejected_reply;
  std::size_t rounds_since_y = 0;
  std::vector<std::string> certificates;

  Position final_position() const;
};

// Plays up to d rounds, stopping early once the payoff decides the current
// cylinder or a player breaks a rule (that player loses).
Trace referee(const StrategyI& first, const StrategyII& second, const Position& start,
              const Payoff& payoff, std::size_t d);

// Re-derives audit and outcome from the recorded moves alone.
Trace replay(const Trace& trace);

// True when the recorded audit and outcome match a fresh replay.
bool replay_matches(const Trace& trace);

}  // namespace mgame

#endif  // MGAME_REFEREE_HPP_
