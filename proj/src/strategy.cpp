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

#include "mgame/strategy.hpp"

#include <stdexcept>

namespace mgame {

std::vector<Rational> StrategyII::exact_delta(const Position&, const Rational&) const {
  throw std::logic_error(name() + " does not report exact thresholds");
}

std::optional<MoveI> StrategyII::witness(const Position&, const Rational&, int,
                                         const Rational&) const {
  return std::nullopt;
}

namespace {

// Largest mass cell j may hold while the rule still skips past it toward
// `side`, and whether that bound is attained.
struct Bound {
  Rational value;
  bool attained;
};

Bound other_bound(const CoverThresholds& c, int side, std::size_t j) {
  const Rational& cap = c.cap[j];
  if (static_cast<int>(j) < side) {
    if (c.cover[j] < cap || cap.is_zero()) return {min(c.cover[j], cap), true};
    return {cap, false};
  }
  return {cap, cap.is_zero()};
}

Rational others_sup(const CoverThresholds& c, int side) {
  Rational s;
  for (std::size_t j = 0; j < c.cap.size(); ++j) {
    if (static_cast<int>(j) != side) s += other_bound(c, side, j).value;
  }
  return s;
}

// Spreads `amount` over the other cells: attained bounds are filled first in
// order, then the rest is shared in proportion to the open bounds.
std::optional<std::vector<Rational>> spread(const CoverThresholds& c, int side, Rational amount) {
  std::vector<Rational> out(c.cap.size());
  Rational pool;
  for (std::size_t j = 0; j < c.cap.size(); ++j) {
    if (static_cast<int>(j) == side) continue;
    const Bound b = other_bound(c, side, j);
    if (b.attained) {
      const Rational take = min(amount, b.value);
      out[j] = take;
      amount -= take;
    } else {
      pool += b.value;
    }
  }
  if (amount.is_zero()) return out;
  if (amount >= pool) return std::nullopt;
  for (std::size_t j = 0; j < c.cap.size(); ++j) {
    if (static_cast<int>(j) == side) continue;
    const Bound b = other_bound(c, side, j);
    if (!b.attained) out[j] = amount * b.value / pool;
  }
  return out;
}

}  // namespace

std::vector<Rational> cover_delta(const CoverThresholds& c, const Rational& r, bool at_root) {
  const std::size_t n = c.cap.size();
  std::vector<Rational> delta(n);
  for (std::size_t q = 0; q < n; ++q) {
    const int side = static_cast<int>(q);
    const Rational max_others = others_sup(c, side);
    const Rational lo = max(c.cover[q], r - max_others);
    bool feasible;
    if (at_root) {
      feasible = lo < c.cap[q];
    } else {
      const Rational hi = min(c.cap[q], r);
      feasible = lo < hi || (max_others.is_zero() && c.cover[q] < r && r < c.cap[q]);
    }
    delta[q] = feasible ? max(lo, Rational(0)) : c.cap[q];
  }
  return delta;
}

std::optional<MoveI> cover_witness(const CoverThresholds& c, const Rational& r, bool at_root,
                                   int side, const Rational& v) {
  const std::size_t n = c.cap.size();
  if (side < 0 || static_cast<std::size_t>(side) >= n) return std::nullopt;
  if (v <= c.cover[side] || v >= c.cap[side]) return std::nullopt;
  Rational rest;
  if (at_root) {
    if (v <= r) {
      const Rational sup = others_sup(c, side);
      if (r - v >= sup) return std::nullopt;
      rest = simplest_between(r - v, sup);
    }
  } else {
    if (v > r) return std::nullopt;
    rest = r - v;
  }
  auto others = spread(c, side, rest);
  if (!others) return std::nullopt;
  MoveI mv;
  mv.masses = std::move(*others);
  mv.masses[side] = v;
  return mv;
}

int cover_choice(const CoverThresholds& c, const MoveI& offer) {
  for (std::size_t q = 0; q < offer.masses.size(); ++q) {
    if (offer.masses[q] > c.cover[q]) return static_cast<int>(q);
  }
  for (std::size_t q = 0; q < offer.masses.size(); ++q) {
    if (offer.masses[q].sign() > 0) return static_cast<int>(q);
  }
  return 0;
}

}  // namespace mgame
