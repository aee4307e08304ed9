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

#ifndef MGAME_DECIDE_HPP_
#define MGAME_DECIDE_HPP_

#include <optional>
#include <vector>

#include "mgame/certificate.hpp"
#include "mgame/set_expr.hpp"
#include "mgame/strategies.hpp"

namespace mgame {

struct Decision {
  Certificate::Player winner = Certificate::Player::kI;
  // mu(A^c), compared against the stake.
  Rational complement_mass;
  // Exactly one of these is set, matching the winner.
  std::shared_ptr<ClosedStrategyI> strategy_i;
  std::shared_ptr<CoverStrategyII> strategy_ii;
  Certificate certificate;
};

// Winner of G(s, A) for clopen A, with the constructed strategy and a
// certificate tabulated to `depth` (default: the depth of A, at least 1).
// Throws std::invalid_argument for non-clopen A.
Decision decide_by_measure(const DyadicMeasure& mu, const SetExpr& a, const Rational& s,
                           std::optional<std::size_t> depth = std::nullopt);

struct GridResult {
  bool i_wins = false;
  // True when |mu(A^c) - s| <= 2/Q.
  bool resolution_limited = false;
  // Largest grid first-move total with which I forces a win (0 if none).
  Rational value;
  std::size_t states = 0;
};

// Backward induction over (node, mass) states where I's masses are multiples
// of 1/Q of the current mass (of 1 at the root) and II wins at depth d iff
// the node lies in A.
GridResult grid_minimax(const DyadicMeasure& mu, const SetExpr& a, const Rational& s, int q,
                        std::size_t d);

}  // namespace mgame

#endif  // MGAME_DECIDE_HPP_
