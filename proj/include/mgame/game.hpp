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

#ifndef MGAME_GAME_HPP_
#define MGAME_GAME_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mgame/measure.hpp"
#include "mgame/node.hpp"
#include "mgame/pair_tree.hpp"
#include "mgame/rational.hpp"

namespace mgame {

enum class Variant { kG, kG2, kUnfolded };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& s);

// Masses offered to each child cell: two entries, or four quadrants
// (index 2*i + j for first-coordinate bit i, second-coordinate bit j).
struct MoveI {
  std::vector<Rational> masses;
  Rational total() const;
  friend bool operator==(const MoveI&, const MoveI&) = default;
};

struct MoveII {
  int side = 0;
  // Unfolded game only.
  std::optional<int> y;
  friend bool operator==(const MoveII&, const MoveII&) = default;
};

struct Round {
  MoveI offer;
  MoveII reply;
  friend bool operator==(const Round&, const Round&) = default;
};

struct RuleViolation {
  std::string rule;
  std::string detail;
};

// A game history together with the bookkeeping derived from it. Cheap to
// copy apart from the history vector.
class Position {
 public:
  static Position start_g(const Rational& stake, const DyadicMeasure& mu);
  static Position start_g2(const Rational& stake, const DyadicMeasure& first,
                           const DyadicMeasure& second);
  static Position start_unfolded(const Rational& stake, const DyadicMeasure& mu, int alphabet);

  Variant variant() const { return variant_; }
  const Rational& stake() const { return stake_; }
  const DyadicMeasure& measure() const { return mu_; }
  const DyadicMeasure& second_measure() const { return mu2_; }
  int alphabet() const { return alphabet_; }
  int arity() const { return variant_ == Variant::kG2 ? 4 : 2; }

  std::size_t round() const { return history_.size(); }
  bool at_root() const { return history_.empty(); }
  const std::vector<Round>& history() const { return history_; }

  // Current node in G and the unfolded game.
  const Node& node() const { return node_; }
  // Current pair-node in G2.
  const PairNode& pair() const { return pair_; }
  // Node used for payoff classification (the interleaved pair in G2).
  Node payoff_node() const;

  // Mass assigned to the current node (undefined at the root).
  const Rational& mass() const { return mass_; }
  // Total I must distribute: the current mass, or the stake at the root.
  const Rational& budget() const { return at_root() ? stake_ : mass_; }
  // mu(N_t) for the current cell and its children.
  Rational cell_measure() const;
  Rational child_measure(int side) const;

  const YWord& y_digits() const { return y_; }
  // Round index at which each y-digit was played.
  const std::vector<std::size_t>& y_rounds() const { return y_rounds_; }
  std::size_t rounds_since_y() const;

  // Applies a round without checking legality.
  Position after(const MoveI& offer, const MoveII& reply) const;
  // Truncates to the first n rounds.
  Position prefix(std::size_t n) const;
  // Compact text key of the history, for memo tables.
  std::string key() const;

 private:
  Variant variant_ = Variant::kG;
  Rational stake_;
  DyadicMeasure mu_ = DyadicMeasure::fair();
  DyadicMeasure mu2_ = DyadicMeasure::fair();
  int alphabet_ = 0;
  std::vector<Round> history_;
  Node node_;
  PairNode pair_;
  Rational mass_ = 1;
  YWord y_;
  std::vector<std::size_t> y_rounds_;
};

// Legality of I's offer at pos; names the first broken rule.
std::optional<RuleViolation> validate_move(const Position& pos, const MoveI& offer);
// Legality of II's reply to a (legal) offer.
std::optional<RuleViolation> validate_move(const Position& pos, const MoveI& offer,
                                           const MoveII& reply);

}  // namespace mgame

#endif  // MGAME_GAME_HPP_
