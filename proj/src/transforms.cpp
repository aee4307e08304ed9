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

#include "mgame/transforms.hpp"

#include <stdexcept>

namespace mgame {

SwapResult swap_I_to_II(const StrategyI& sigma, const DyadicMeasure& mu, const SetExpr& a,
                        const Rational& s, std::size_t d) {
  SwapResult out;
  out.target_stake = Rational(1) - s;
  const IWitness w = extract_scaled_measure(sigma, Position::start_g(s, mu), d);
  out.audit = audit_i_witness(w, mu, &a);
  if (!out.audit.empty()) return out;
  const Clopen support = Clopen::from_nodes(w.support(d));
  out.basis = ~support;
  out.strategy_ii = strategy_II_from_open(mu, SetExpr::clopen(out.basis), out.target_stake);
  return out;
}

SwapResult swap_II_to_I(const StrategyII& tau, const DyadicMeasure& mu, const SetExpr& a,
                        const Rational& s, const Rational& eps, std::size_t d) {
  SwapResult out;
  out.target_stake = Rational(1) - s;
  if (!(eps.sign() > 0) || s - eps < Rational(0)) {
    out.audit.push_back("need 0 < eps <= s");
    return out;
  }
  const Position start = Position::start_g(s - eps, mu);
  const IIWitness w = extract_tree(tau, start, eps / Rational(2), d);
  out.audit = audit_ii_witness(w, tau, start, &a);
  if (w.approximate) out.audit.push_back("source tree is approximate");
  if (!out.audit.empty()) return out;
  out.basis = w.tree_clopen(d, mu);
  const Rational mass = out.basis.mass(mu);
  if (!(mass > out.target_stake)) {
    out.audit.push_back("tree mass " + mass.str() + " not above " + out.target_stake.str());
    return out;
  }
  const Rational slack = (Rational(1) - out.target_stake / mass) / Rational(2);
  out.strategy_i = strategy_I_from_closed(mu, SetExpr::clopen(out.basis), out.target_stake, slack);
  return out;
}

IntersectResult intersect_strategies(const std::vector<StakedStrategy>& sources,
                                     const DyadicMeasure& mu, const Rational& eps, std::size_t d,
                                     int q) {
  IntersectResult out;
  Rational total;
  for (const auto& src : sources) total += src.stake;
  if (!(total < eps) || !(eps < Rational(1))) {
    throw std::invalid_argument("need sum of stakes < eps < 1");
  }
  const Rational spare = eps - total;
  Rational share = spare / Rational(2);
  for (std::size_t n = 0; n < sources.size(); ++n) {
    share /= Rational(2);
    const auto& src = sources[n];
    const Position start = Position::start_g(src.stake, mu);
    IIWitness w = extract_tree(*src.tau, start, share, d, q);
    for (const auto& f : audit_ii_witness(w, *src.tau, start, src.payoff ? &*src.payoff : nullptr)) {
      out.audit.push_back("source " + std::to_string(n) + ": " + f);
    }
    out.cover = out.cover | ~w.tree_clopen(d, mu);
    out.trees.push_back(std::move(w));
  }
  out.cover_mass = out.cover.mass(mu);
  if (out.cover_mass > eps) {
    out.audit.push_back("cover mass " + out.cover_mass.str() + " exceeds " + eps.str());
  }
  if (out.audit.empty()) {
    out.strategy = strategy_II_from_open(mu, SetExpr::clopen(out.cover), eps);
  }
  return out;
}

}  // namespace mgame
