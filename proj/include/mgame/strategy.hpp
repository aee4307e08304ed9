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

#ifndef MGAME_STRATEGY_HPP_
#define MGAME_STRATEGY_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mgame/game.hpp"

namespace mgame {

// Decision rules are pure functions of the position. Implementations may
// memoize internally but must stay safe to call from several threads.
class StrategyI {
 public:
  virtual ~StrategyI() = default;
  // nullopt means resignation.
  virtual std::optional<MoveI> move(const Position& pos) const = 0;
  virtual std::string name() const = 0;
};

class StrategyII {
 public:
  virtual ~StrategyII() = default;
  virtual std::optional<MoveII> reply(const Position& pos, const MoveI& offer) const = 0;
  virtual std::string name() const = 0;

  // Strategies that know their side thresholds exactly.
  virtual bool has_exact_delta() const { return false; }
  // Per-cell infimum of the mass that makes this strategy pick the cell, among
  // legal offers distributing `r` (at the root: any total above r).
  virtual std::vector<Rational> exact_delta(const Position& pos, const Rational& r) const;
  // A legal offer of total r (above r at the root) assigning v to `side`
  // that this strategy answers with `side`; requires delta < v < cell mass.
  virtual std::optional<MoveI> witness(const Position& pos, const Rational& r, int side,
                                       const Rational& v) const;
};

using StrategyIPtr = std::shared_ptr<const StrategyI>;
using StrategyIIPtr = std::shared_ptr<const StrategyII>;

// Threshold data for an II strategy that picks the first cell (in a fixed
// preference order) whose offered mass exceeds its cover mass.
struct CoverThresholds {
  std::vector<Rational> cover;  // mu(U ∩ cell)
  std::vector<Rational> cap;    // mu(cell)
};

// Infimum for each cell as in exact_delta, for the first-exceeding-cover rule.
std::vector<Rational> cover_delta(const CoverThresholds& c, const Rational& r, bool at_root);
// Witness offer for the first-exceeding-cover rule, or nullopt when v is out of
// range.
std::optional<MoveI> cover_witness(const CoverThresholds& c, const Rational& r, bool at_root,
                                   int side, const Rational& v);
// The first-exceeding-cover choice, falling back to the first nonzero cell.
int cover_choice(const CoverThresholds& c, const MoveI& offer);

}  // namespace mgame

#endif  // MGAME_STRATEGY_HPP_
