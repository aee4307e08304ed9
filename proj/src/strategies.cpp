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

#include "mgame/strategies.hpp"

#include <stdexcept>

namespace mgame {

std::optional<std::pair<Rational, Rational>> split_between(const Rational& mass,
                                                           const Rational& f0,
                                                           const Rational& f1,
                                                           const Rational& eps) {
  const Rational keep = Rational(1) - eps;
  if (f0.is_zero()) return std::make_pair(Rational(0), mass);
  if (f1.is_zero()) return std::make_pair(mass, Rational(0));
  const Rational lo = max(keep * f0, mass - f1);
  const Rational hi = min(f0, mass - keep * f1);
  if (!(lo < hi)) return std::nullopt;
  const Rational m0 = simplest_between(lo, hi);
  return std::make_pair(m0, mass - m0);
}

ClosedStrategyI::ClosedStrategyI(DyadicMeasure mu, Clopen target, Rational eps, std::string label)
    : mu_(std::move(mu)), target_(std::move(target)), eps_(std::move(eps)), label_(std::move(label)) {}

std::optional<MoveI> ClosedStrategyI::move(const Position& pos) const {
  if (pos.arity() != 2) return std::nullopt;
  const Node& u = pos.node();
  const Rational f0 = target_.mass_within(mu_, u.child(0));
  const Rational f1 = target_.mass_within(mu_, u.child(1));
  const Rational keep = Rational(1) - eps_;
  MoveI mv;
  if (pos.at_root()) {
    mv.masses = {f0.is_zero() ? Rational(0) : simplest_between(keep * f0, f0),
                 f1.is_zero() ? Rational(0) : simplest_between(keep * f1, f1)};
    return mv;
  }
  auto split = split_between(pos.mass(), f0, f1, eps_);
  if (!split) return std::nullopt;
  mv.masses = {split->first, split->second};
  return mv;
}

CoverStrategyII::CoverStrategyII(CoverFn cover, std::string label)
    : cover_(std::move(cover)), label_(std::move(label)) {}

std::optional<MoveII> CoverStrategyII::reply(const Position& pos, const MoveI& offer) const {
  return MoveII{cover_choice(cover_(pos), offer), std::nullopt};
}

std::vector<Rational> CoverStrategyII::exact_delta(const Position& pos, const Rational& r) const {
  return cover_delta(cover_(pos), r, pos.at_root());
}

std::optional<MoveI> CoverStrategyII::witness(const Position& pos, const Rational& r, int side,
                                              const Rational& v) const {
  return cover_witness(cover_(pos), r, pos.at_root(), side, v);
}

CoverThresholds clopen_cover(const Clopen& u, const DyadicMeasure& mu, const Position& pos) {
  CoverThresholds c;
  for (int q = 0; q < 2; ++q) {
    const Node child = pos.node().child(q);
    c.cover.push_back(u.mass_within(mu, child));
    c.cap.push_back(mu.mass(child));
  }
  return c;
}

std::shared_ptr<ClosedStrategyI> strategy_I_from_closed(const DyadicMeasure& mu, const SetExpr& f,
                                                        const Rational& s, const Rational& eps) {
  if (!f.as_clopen()) throw std::invalid_argument("closed target needs an exact clopen form");
  const Rational mass = f.as_clopen()->mass(mu);
  if (!(mass > s)) throw std::invalid_argument("closed target mass " + mass.str() + " <= stake");
  if (eps.sign() <= 0 || eps >= Rational(1) || !((Rational(1) - eps) * mass > s)) {
    throw std::invalid_argument("need 0 < eps and (1 - eps) mu(F) > s");
  }
  return std::make_shared<ClosedStrategyI>(mu, *f.as_clopen(), eps,
                                           "closed-I[" + f.describe() + ",eps=" + eps.str() + "]");
}

std::shared_ptr<CoverStrategyII> strategy_II_from_open(const DyadicMeasure& mu, const SetExpr& u,
                                                       const Rational& s) {
  if (!u.as_clopen()) throw std::invalid_argument("open cover needs an exact clopen form");
  const Clopen cover = *u.as_clopen();
  const Rational mass = cover.mass(mu);
  if (mass > s) throw std::invalid_argument("open cover mass " + mass.str() + " > stake");
  return std::make_shared<CoverStrategyII>(
      [cover, mu](const Position& pos) { return clopen_cover(cover, mu, pos); },
      "open-II[" + u.describe() + "]");
}

RationalizedII::RationalizedII(StrategyIIPtr inner, Rational eps)
    : inner_(std::move(inner)), eps_(std::move(eps)) {
  if (eps_.sign() <= 0 || eps_ >= Rational(1)) throw std::invalid_argument("eps must lie in (0, 1)");
}

std::optional<MoveI> RationalizedII::approximate(const Position& paired_pos,
                                                 const MoveI& offer) const {
  if (offer.masses.size() != 2) return std::nullopt;
  const Rational keep = Rational(1) - eps_;
  MoveI mv;
  if (paired_pos.at_root()) {
    if (!(keep * offer.total() > paired_pos.stake())) return std::nullopt;
    for (const Rational& m : offer.masses) {
      mv.masses.push_back(m.is_zero() ? Rational(0) : simplest_between(keep * m, m));
    }
    return mv;
  }
  auto split = split_between(paired_pos.mass(), offer.masses[0], offer.masses[1], eps_);
  if (!split) return std::nullopt;
  mv.masses = {split->first, split->second};
  return mv;
}

std::optional<Position> RationalizedII::paired(const Position& pos) const {
  Position rational = pos.prefix(0);
  for (const Round& r : pos.history()) {
    auto approx = approximate(rational, r.offer);
    if (!approx) return std::nullopt;
    rational = rational.after(*approx, r.reply);
  }
  return rational;
}

std::optional<MoveII> RationalizedII::reply(const Position& pos, const MoveI& offer) const {
  auto rational = paired(pos);
  if (!rational) return std::nullopt;
  auto approx = approximate(*rational, offer);
  if (!approx) return std::nullopt;
  return inner_->reply(*rational, *approx);
}

std::shared_ptr<RationalizedII> rationalize_strategy(StrategyIIPtr tau, const Rational& eps) {
  return std::make_shared<RationalizedII>(std::move(tau), eps);
}

}  // namespace mgame
