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

#ifndef MGAME_TRANSFORMS_HPP_
#define MGAME_TRANSFORMS_HPP_

#include <string>
#include <vector>

#include "mgame/certificate.hpp"
#include "mgame/strategies.hpp"

namespace mgame {

enum class SwapDirection { kIToII, kIIToI };

struct SwapResult {
  // Failures of the source audit; strategies are set only when empty.
  std::vector<std::string> audit;
  Rational target_stake;
  std::shared_ptr<CoverStrategyII> strategy_ii;
  std::shared_ptr<ClosedStrategyI> strategy_i;
  // The clopen set the new strategy is built on (open cover or closed tree).
  Clopen basis = Clopen::empty();
};

// I -> II: `sigma` wins G(s, A); returns an II strategy for G(1 - s, A^c)
// avoiding the complement of sigma's support at depth d.
SwapResult swap_I_to_II(const StrategyI& sigma, const DyadicMeasure& mu, const SetExpr& a,
                        const Rational& s, std::size_t d);
// II -> I: `tau` wins G(s - eps, A); returns an I strategy for G(1 - s, A^c)
// playing into tau's tree at depth d.
SwapResult swap_II_to_I(const StrategyII& tau, const DyadicMeasure& mu, const SetExpr& a,
                        const Rational& s, const Rational& eps, std::size_t d);

struct StakedStrategy {
  Rational stake;
  StrategyIIPtr tau;
  // II's payoff in the source game, checked against the extracted tree.
  std::optional<SetExpr> payoff;
};

struct IntersectResult {
  std::vector<std::string> audit;
  std::vector<IIWitness> trees;
  Clopen cover = Clopen::empty();
  Rational cover_mass;
  std::shared_ptr<CoverStrategyII> strategy;
};

// Direct tree argument for countable additivity: builds each source tree
// with a share of the slack eps - sum(stakes) and returns the open-cover
// strategy over the union of the tree complements at depth d.
IntersectResult intersect_strategies(const std::vector<StakedStrategy>& sources,
                                     const DyadicMeasure& mu, const Rational& eps, std::size_t d,
                                     int q = 64);

}  // namespace mgame

#endif  // MGAME_TRANSFORMS_HPP_
