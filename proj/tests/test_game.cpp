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

#include <random>

#include "doctest.h"
#include "mgame/adversary.hpp"
#include "mgame/decide.hpp"
#include "mgame/delta.hpp"
#include "mgame/game.hpp"
#include "mgame/referee.hpp"
#include "mgame/strategies.hpp"

using namespace mgame;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }
MoveI offer(std::vector<Rational> m) { return MoveI{std::move(m)}; }

// Picks cell 0 whenever it is nonzero; opaque to threshold queries.
class PreferZero : public StrategyII {
 public:
  std::optional<MoveII> reply(const Position&, const MoveI& mv) const override {
    return MoveII{mv.masses[0].sign() > 0 ? 0 : 1, std::nullopt};
  }
  std::string name() const override { return "prefer-zero"; }
};

// Fixed opening offer, then proportional splits.
class Concentrate : public StrategyI {
 public:
  std::optional<MoveI> move(const Position& pos) const override {
    if (pos.at_root()) return offer({R(1, 3), R(0)});
    return offer({pos.mass() / R(2), pos.mass() / R(2)});
  }
  std::string name() const override { return "concentrate"; }
};

}  // namespace

TEST_CASE("first-move rules") {
  const Position p = Position::start_g(R(1, 2), DyadicMeasure::fair());
  auto v = validate_move(p, offer({R(1, 4), R(1, 4)}));
  REQUIRE(v);
  CHECK(v->rule == "first_sum_exceeds_stake");
  v = validate_move(p, offer({R(1, 2), R(1, 8)}));
  REQUIRE(v);
  CHECK(v->rule == "strict_below_cell");
  CHECK_FALSE(validate_move(p, offer({R(3, 8), R(3, 16)})));
  v = validate_move(p, offer({R(-1, 8), R(3, 4)}));
  REQUIRE(v);
  CHECK(v->rule == "nonnegative");
  v = validate_move(p, offer({R(1, 4)}));
  REQUIRE(v);
  CHECK(v->rule == "arity");
}

TEST_CASE("later-round rules") {
  const Position p0 = Position::start_g(R(0), DyadicMeasure::fair());
  const MoveI first = offer({R(1, 4), R(0)});
  auto w = validate_move(p0, first, MoveII{1, std::nullopt});
  REQUIRE(w);
  CHECK(w->rule == "side_nonzero");
  const Position p1 = p0.after(first, MoveII{0, std::nullopt});
  CHECK(p1.mass() == R(1, 4));
  CHECK(p1.node() == Node("0"));
  auto v = validate_move(p1, offer({R(1, 8), R(1, 16)}));
  REQUIRE(v);
  CHECK(v->rule == "additive");
  CHECK_FALSE(validate_move(p1, offer({R(1, 8), R(1, 8)})));
  // Zero-measure cells force zero mass.
  const Position pz = Position::start_g(R(0), DyadicMeasure::bernoulli(R(0)));
  v = validate_move(pz, offer({R(1, 2), R(1, 100)}));
  REQUIRE(v);
  CHECK(v->rule == "dominated");
}

TEST_CASE("unfolded y-digits") {
  const Position p = Position::start_unfolded(R(0), DyadicMeasure::fair(), 3);
  const MoveI mv = offer({R(1, 4), R(1, 4)});
  auto w = validate_move(p, mv, MoveII{0, 3});
  REQUIRE(w);
  CHECK(w->rule == "y_alphabet");
  CHECK_FALSE(validate_move(p, mv, MoveII{0, 2}));
  const Position g = Position::start_g(R(0), DyadicMeasure::fair());
  w = validate_move(g, mv, MoveII{0, 1});
  REQUIRE(w);
  CHECK(w->rule == "y_not_allowed");
  Position q = p.after(mv, MoveII{0, std::nullopt});
  q = q.after(offer({R(1, 8), R(1, 8)}), MoveII{1, 2});
  q = q.after(offer({R(1, 16), R(1, 16)}), MoveII{1, std::nullopt});
  CHECK(q.y_digits() == YWord{2});
  CHECK(q.y_rounds() == std::vector<std::size_t>{1});
  CHECK(q.rounds_since_y() == 1);
}

TEST_CASE("G2 positions") {
  const Position p = Position::start_g2(R(0), DyadicMeasure::fair(), DyadicMeasure::bernoulli(R(1, 3)));
  CHECK(p.arity() == 4);
  CHECK(p.child_measure(3) == R(1, 6));
  const MoveI mv = offer({R(1, 10), R(1, 10), R(1, 10), R(1, 10)});
  CHECK_FALSE(validate_move(p, mv));
  const Position q = p.after(mv, MoveII{2, std::nullopt});
  CHECK(q.pair().first == Node("1"));
  CHECK(q.pair().second == Node("0"));
  CHECK(q.payoff_node() == Node("10"));
}

TEST_CASE("referee outcomes") {
  const auto fair = DyadicMeasure::fair();
  const Position start = Position::start_g(R(1, 4), fair);
  RandomI any(1);
  RandomII anyone(2);
  Trace t = referee(any, anyone, start, Payoff::of_set(SetExpr::full()), 5);
  CHECK(t.outcome == Outcome::kIIDecided);
  CHECK(t.final_depth == 0);

  Concentrate left;
  t = referee(left, anyone, start, Payoff::of_set(SetExpr::clopen({Node("1")})), 5);
  CHECK(t.outcome == Outcome::kIDecided);
  CHECK(t.final_depth == 1);

  const SetExpr a = SetExpr::clopen({Node("1")});
  const Decision dec = decide_by_measure(fair, a, R(1, 4));
  REQUIRE(dec.strategy_i);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomII opp(seed);
    t = referee(*dec.strategy_i, opp, start, Payoff::of_set(a), 8);
    CHECK(t.outcome == Outcome::kIDecided);
    CHECK(t.moves.front().reply.side == 0);
  }
}

TEST_CASE("violations end the run against the violator") {
  class Cheat : public StrategyI {
   public:
    std::optional<MoveI> move(const Position&) const override { return offer({R(1, 8), R(1, 8)}); }
    std::string name() const override { return "cheat"; }
  };
  Cheat cheat;
  RandomII opp(0);
  const Trace t = referee(cheat, opp, Position::start_g(R(1, 2), DyadicMeasure::fair()),
                          Payoff::of_set(SetExpr::clopen({Node("11")})), 4);
  CHECK(t.outcome == Outcome::kIIDecided);
  REQUIRE(t.violation);
  CHECK(*t.violation == "I:first_sum_exceeds_stake");
  CHECK(replay_matches(t));
}

TEST_CASE("traces replay and repeat") {
  const auto mu = DyadicMeasure::bernoulli(R(2, 5));
  const SetExpr a = SetExpr::clopen({Node("01"), Node("110")});
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    RandomI i(seed);
    RandomII ii(seed + 100);
    const Position start = Position::start_g(R(1, 5), mu);
    const Trace t1 = referee(i, ii, start, Payoff::of_set(a), 6);
    const Trace t2 = referee(i, ii, start, Payoff::of_set(a), 6);
    CHECK(t1.moves == t2.moves);
    CHECK(t1.audit == t2.audit);
    CHECK(replay_matches(t1));
    Position p = start;
    for (const Round& r : t1.moves) {
      CHECK(r.offer.total() == (p.at_root() ? r.offer.total() : p.mass()));
      p = p.after(r.offer, r.reply);
      CHECK(p.mass().sign() > 0);
    }
  }
}

TEST_CASE("random legal offers are legal") {
  for (const Position& start :
       {Position::start_g(R(3, 7), DyadicMeasure::bernoulli(R(1, 3))),
        Position::start_g2(R(1, 2), DyadicMeasure::fair(), DyadicMeasure::bernoulli(R(1, 4))),
        Position::start_g(R(0), DyadicMeasure::atoms({{Node(), Node("01"), R(1, 2)},
                                                      {Node("1"), Node("1"), R(1, 2)}}))}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      RandomI i(seed);
      RandomII ii(seed);
      Position p = start;
      for (int k = 0; k < 8; ++k) {
        auto mv = i.move(p);
        REQUIRE(mv);
        CHECK_FALSE(validate_move(p, *mv));
        auto r = ii.reply(p, *mv);
        REQUIRE(r);
        CHECK_FALSE(validate_move(p, *mv, *r));
        p = p.after(*mv, *r);
      }
    }
  }
}

TEST_CASE("exact thresholds of an open cover") {
  const auto fair = DyadicMeasure::fair();
  auto tau = strategy_II_from_open(fair, SetExpr::clopen({Node("00")}), R(1, 2));
  const Position root = Position::start_g(R(1, 2), fair);
  const DeltaEstimate est = estimate_delta(*tau, root, R(3, 5), 16);
  CHECK(est.exact);
  CHECK(est.delta[0] == R(1, 4));
  CHECK(est.delta[1] == R(7, 20));
  CHECK(est.delta[0] + est.delta[1] == R(3, 5));
}

TEST_CASE("black-box thresholds") {
  const auto fair = DyadicMeasure::fair();
  PreferZero tau;
  const Position p = Position::start_g(R(0), fair).after(offer({R(1, 4), R(1, 4)}), MoveII{0, std::nullopt});
  const DeltaEstimate est = estimate_delta(tau, p, p.mass(), 16);
  CHECK_FALSE(est.exact);
  CHECK(est.delta[0] == R(0));
  CHECK(est.delta[1] == p.mass());
  CHECK_FALSE(est.witness[1]);
}

TEST_CASE("threshold bounds") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> pick(1, 9);
  const auto mu = DyadicMeasure::bernoulli(R(2, 5));
  const std::vector<std::vector<Node>> covers{{}, {Node("00")}, {Node("01"), Node("10")}, {Node("1")}};
  for (const auto& cov : covers) {
    const SetExpr u = SetExpr::clopen(cov);
    const Rational s = max(u.as_clopen()->mass(mu), R(1, 10));
    if (!(s < R(1))) continue;
    auto tau = strategy_II_from_open(mu, u, s);
    for (int trial = 0; trial < 20; ++trial) {
      RandomI i(static_cast<std::uint64_t>(trial));
      Position p = Position::start_g(s, mu);
      for (int k = 0; k < 4; ++k) {
        const Rational r = p.budget();
        const DeltaEstimate exact = estimate_delta(*tau, p, r, 16);
        Rational sum;
        for (int side = 0; side < 2; ++side) {
          CHECK(exact.delta[side] <= p.child_measure(side));
          sum += exact.delta[side];
          if (exact.witness[side]) {
            CHECK_FALSE(validate_move(p, *exact.witness[side]));
            CHECK(tau->reply(p, *exact.witness[side])->side == side);
          }
        }
        CHECK(sum <= r);
        RandomII opaque(static_cast<std::uint64_t>(trial * 7 + k));
        const DeltaEstimate grid = estimate_delta(opaque, p, r, 16);
        CHECK(grid.delta[0] + grid.delta[1] <= r + R(2) * grid.resolution);
        auto mv = i.move(p);
        p = p.after(*mv, *tau->reply(p, *mv));
      }
    }
  }
}
