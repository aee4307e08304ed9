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

#ifndef MGAME_DELTA_HPP_
#define MGAME_DELTA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "mgame/game.hpp"
#include "mgame/strategy.hpp"

namespace mgame {

struct DeltaEstimate {
  // Per-cell threshold; exact, or a lower bound within `resolution` of the
  // smallest grid value that elicits the cell.
  std::vector<Rational> delta;
  // Offer that the strategy answers with that cell, assigning it a value in
  // (delta, delta + resolution]; absent when the cell was never elicited.
  std::vector<std::optional<MoveI>> witness;
  bool exact = false;
  Rational resolution;
  std::vector<std::string> notes;
};

// Search step r/Q, or (1 - s)/Q at the root when r = 0.
Rational delta_resolution(const Position& pos, const Rational& r, int q);

// Thresholds of `tau` at `pos` for offers distributing r (any total above r
// at the root). Exact strategies answer directly; others get a grid scan
// over legal two-cell offers refined by bisection.
DeltaEstimate estimate_delta(const StrategyII& tau, const Position& pos, const Rational& r,
                             int q);

}  // namespace mgame

#endif  // MGAME_DELTA_HPP_
