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

#include "mgame/delta.hpp"

#include <stdexcept>

namespace mgame {

Rational delta_resolution(const Position& pos, const Rational& r, int q) {
  if (q < 2) throw std::invalid_argument("resolution Q must be at least 2");
  if (r.sign() > 0) return r / Rational(q);
  return (Rational(1) - pos.stake()) / Rational(q);
}

namespace {

constexpr int kBisectionSteps = 12;

// True when offering v to `side` (rest to the other cell) is legal and tau
// answers with `side`.
bool elicits(const StrategyII& tau, const Position& pos, const Rational& total, int side,
             const Rational& v, MoveI* out) {
  MoveI mv;
  mv.masses.assign(2, Rational(0));
  mv.masses[side] = v;
  mv.masses[1 - side] = total - v;
  if (validate_move(pos, mv)) return false;
  auto reply = tau.reply(pos, mv);
  if (!reply || validate_move(pos, mv, *reply) || reply->side != side) return false;
  if (out) *out = std::move(mv);
  return true;
}

}  // namespace

DeltaEstimate estimate_delta(const StrategyII& tau, const Position& pos, const Rational& r,
                             int q) {
  DeltaEstimate est;
  est.resolution = delta_resolution(pos, r, q);
  const int n = pos.arity();
  if (tau.has_exact_delta()) {
    est.exact = true;
    est.delta = tau.exact_delta(pos, r);
    est.witness.resize(n);
    for (int side = 0; side < n; ++side) {
      const Rational cap = pos.child_measure(side);
      if (est.delta[side] >= cap) continue;
      const Rational v = simplest_between(est.delta[side], min(est.delta[side] + est.resolution, cap));
      est.witness[side] = tau.witness(pos, r, side, v);
      if (!est.witness[side]) est.notes.push_back("exact strategy gave no witness for cell " + std::to_string(side));
    }
    return est;
  }
  if (n != 2) throw std::invalid_argument("black-box threshold search supports two cells only");
  // At the root the probe total sits just above the stake.
  const Rational total = pos.at_root() ? r + est.resolution / Rational(2) : r;
  est.delta.resize(2);
  est.witness.resize(2);
  for (int side = 0; side < 2; ++side) {
    const Rational cap = pos.child_measure(side);
    std::optional<int> hit;
    MoveI mv;
    for (int j = 1; j <= q; ++j) {
      if (elicits(tau, pos, total, side, total * Rational(j, q), &mv)) {
        hit = j;
        break;
      }
    }
    if (!hit) {
      est.delta[side] = cap;
      est.notes.push_back("no witness found at resolution Q for cell " + std::to_string(side));
      continue;
    }
    Rational lo = total * Rational(*hit - 1, q);
    Rational hi = total * Rational(*hit, q);
    for (int k = 0; k < kBisectionSteps; ++k) {
      const Rational mid = (lo + hi) / Rational(2);
      MoveI probe;
      if (elicits(tau, pos, total, side, mid, &probe)) {
        hi = mid;
        mv = std::move(probe);
      } else {
        lo = mid;
      }
    }
    est.delta[side] = lo;
    est.witness[side] = mv;
  }
  return est;
}

}  // namespace mgame
