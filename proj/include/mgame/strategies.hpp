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

#ifndef MGAME_STRATEGIES_HPP_
#define MGAME_STRATEGIES_HPP_

#include <functional>
#include <memory>
#include <string>

#include "mgame/clopen.hpp"
#include "mgame/set_expr.hpp"
#include "mgame/strategy.hpp"

namespace mgame {

// Splits `mass` between two cells with targets f0, f1 so that each part lands
// in ((1 - eps) f_i, f_i), or exactly 0 when f_i = 0. Requires
// (1 - eps)(f0 + f1) < mass < f0 + f1 unless a target is 0.
std::optional<std::pair<Rational, Rational>> split_between(const Rational& mass,
                                                           const Rational& f0,
                                                           const Rational& f1,
                                                           const Rational& eps);

// I plays M(u) strictly between (1 - eps) mu(F ∩ N_u) and mu(F ∩ N_u).
// Works in G and in the unfolded game (where it ignores y).
class ClosedStrategyI : public StrategyI {
 public:
  ClosedStrategyI(DyadicMeasure mu, Clopen target, Rational eps, std::string label);
  std::optional<MoveI> move(const Position& pos) const override;
  std::string name() const override { return label_; }
  const Clopen& target() const { return target_; }
  const Rational& eps() const { return eps_; }

 private:
  DyadicMeasure mu_;
  Clopen target_;
  Rational eps_;
  std::string label_;
};

// II picks the first cell whose offered mass exceeds the cover mass in it.
class CoverStrategyII : public StrategyII {
 public:
  using CoverFn = std::function<CoverThresholds(const Position&)>;
  CoverStrategyII(CoverFn cover, std::string label);

  std::optional<MoveII> reply(const Position& pos, const MoveI& offer) const override;
  std::string name() const override { return label_; }
  bool has_exact_delta() const override { return true; }
  std::vector<Rational> exact_delta(const Position& pos, const Rational& r) const override;
  std::optional<MoveI> witness(const Position& pos, const Rational& r, int side,
                               const Rational& v) const override;
  CoverThresholds thresholds(const Position& pos) const { return cover_(pos); }

 private:
  CoverFn cover_;
  std::string label_;
};

// Throws std::invalid_argument unless F is clopen, mu(F) > s and
// (1 - eps) mu(F) > s.
std::shared_ptr<ClosedStrategyI> strategy_I_from_closed(const DyadicMeasure& mu, const SetExpr& f,
                                                        const Rational& s, const Rational& eps);
// Throws std::invalid_argument unless U is clopen with mu(U) <= s.
std::shared_ptr<CoverStrategyII> strategy_II_from_open(const DyadicMeasure& mu, const SetExpr& u,
                                                       const Rational& s);

// Cover thresholds of a clopen U at the current node of a two-cell game.
CoverThresholds clopen_cover(const Clopen& u, const DyadicMeasure& mu, const Position& pos);

// II strategy for the game where I's masses may be arbitrary reals
// (represented here by rationals of any size): each offer is replaced by
// rationals in ((1 - eps) m', m'), and tau answers the paired rational run.
class RationalizedII : public StrategyII {
 public:
  RationalizedII(StrategyIIPtr inner, Rational eps);
  std::optional<MoveII> reply(const Position& pos, const MoveI& offer) const override;
  std::string name() const override { return "rationalized(" + inner_->name() + ")"; }

  // The rational run paired with `pos`, or nullopt if some offer is
  std::optional<Position> paired(const Position& pos) const;
  std::optional<MoveI> approximate(const Position& paired_pos, const MoveI& offer) const;

 private:
  StrategyIIPtr inner_;
  Rational eps_;
};

std::shared_ptr<RationalizedII> rationalize_strategy(StrategyIIPtr tau, const Rational& eps);

}  // namespace mgame

#endif  // MGAME_STRATEGIES_HPP_
