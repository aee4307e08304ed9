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
#include "mgame/certificate.hpp"
#include "mgame/decide.hpp"
#include "mgame/referee.hpp"
#include "mgame/strategies.hpp"
#include "mgame/transforms.hpp"

using namespace mgame;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }
MoveI offer(std::vector<Rational> m) { return MoveI{std::move(m)}; }

// Leftmost-branch I strategy: everything on cell 0.
class Leftmost : public StrategyI {
 public:
  std::optional<MoveI> move(const Position& pos) const override {
    if (pos.at_root()) return offer({R(1, 100), R(0)});
    return offer({pos.mass(), R(0)});
  }
  std::string name() const override { return "leftmost"; }
};

}  // namespace

TEST_CASE("closed-set strategy for I") {
  const auto fair = DyadicMeasure::fair();
  auto sigma = strategy_I_from_closed(fair, SetExpr::clopen({Node("0")}), R(1, 4), R(1, 4));
  const Position root = Position::start_g(R(1, 4), fair);
  auto mv = sigma->move(root);
  REQUIRE(mv);
  CHECK(mv->masses[0] == R(2, 5));
  CHECK(mv->masses[1] == R(0));

  auto full = strategy_I_from_closed(fair, SetExpr::full(), R(1, 2), R(1, 4));
  mv = full->move(Position::start_g(R(1, 2), fair));
  CHECK_FALSE(validate_move(Position::start_g(R(1, 2), fair), *mv));
  CHECK(mv->total() > R(3, 4));
  CHECK(mv->total() < R(1));

  CHECK_THROWS(strategy_I_from_closed(fair, SetExpr::clopen({Node("0")}), R(1, 2), R(1, 4)));
  CHECK_THROWS(strategy_I_from_closed(fair, SetExpr::clopen({Node("0")}), R(1, 4), R(1, 2)));

  // Every node II reaches keeps positive target mass.
  const SetExpr f = SetExpr::clopen({Node("00"), Node("011"), Node("1")});
  auto s2 = strategy_I_from_closed(fair, f, R(1, 3), R(1, 5));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomII opp(seed);
    const Trace t = referee(*s2, opp, Position::start_g(R(1, 3), fair),
                            Payoff::of_set(SetExpr::complement(f)), 6);
    CHECK_FALSE(t.violation);
    CHECK(t.outcome == Outcome::kIDecided);
    Position p = t.start;
    for (const Round& r : t.moves) {
      p = p.after(r.offer, r.reply);
      CHECK(f.as_clopen()->mass_within(fair, p.node()).sign() > 0);
    }
  }
}

TEST_CASE("open-cover strategy for II") {
  const auto fair = DyadicMeasure::fair();
  auto none = strategy_II_from_open(fair, SetExpr::empty(), R(0));
  const Position root = Position::start_g(R(1, 4), fair);
  CHECK(none->reply(root, offer({R(1, 5), R(1, 5)}))->side == 0);
  CHECK(none->reply(root, offer({R(0), R(2, 5)}))->side == 1);

  auto tau = strategy_II_from_open(fair, SetExpr::clopen({Node("00")}), R(1, 4));
  CHECK(tau->reply(root, offer({R(3, 10), R(0)}))->side == 0);
  CHECK(Clopen::cylinder(Node("00")).mass_within(fair, Node("0")) < R(3, 10));
  CHECK_THROWS(strategy_II_from_open(fair, SetExpr::clopen({Node("0")}), R(1, 4)));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomI opp(seed);
    const Trace t = referee(opp, *tau, root, Payoff::of_set(SetExpr::complement(SetExpr::clopen({Node("00")}))), 10);
    CHECK_FALSE(t.violation);
    CHECK(t.outcome == Outcome::kIIDecided);
    CHECK_FALSE(Node("00").is_prefix_of(t.final_position().node()));
  }
}

TEST_CASE("scaled measure of an I strategy") {
  const auto fair = DyadicMeasure::fair();
  auto sigma = strategy_I_from_closed(fair, SetExpr::clopen({Node("0")}), R(1, 4), R(1, 4));
  IWitness w = extract_scaled_measure(*sigma, Position::start_g(R(1, 4), fair), 5);
  CHECK(w.root() == R(2, 5));
  for (const auto& [t, m] : w.values) {
    if (m.sign() > 0 && !t.empty()) CHECK(t[0] == 0);
  }
  const SetExpr a = SetExpr::clopen({Node("1")});
  CHECK(audit_i_witness(w, fair, &a).empty());

  Leftmost left;
  w = extract_scaled_measure(left, Position::start_g(R(1, 128), fair), 6);
  REQUIRE_FALSE(w.aborted);
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(w.support(n) == std::vector<Node>{Node::repeat(0, n)});
    CHECK(w.at(Node::repeat(0, n)) == R(1, 100));
  }
  CHECK(audit_i_witness(w, fair, nullptr).empty());
  // A constant mass outgrows the cylinder once 2^-n drops below it.
  w = extract_scaled_measure(left, Position::start_g(R(1, 128), fair), 7);
  CHECK(w.aborted);
}

TEST_CASE("tree of an II strategy") {
  const auto fair = DyadicMeasure::fair();
  auto tau = strategy_II_from_open(fair, SetExpr::clopen({Node("00")}), R(1, 4));
  const Position start = Position::start_g(R(1, 4), fair);
  IIWitness w = extract_tree(*tau, start, R(1, 4), 4);
  CHECK_FALSE(w.approximate);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(complement_frontier(w, n, fair) <= R(1, 2));
    CHECK(level_sum(w, n) <= R(1, 4) + (R(1) - pow2_neg(n)) * R(1, 4));
  }
  const SetExpr a = SetExpr::complement(SetExpr::clopen({Node("00")}));
  CHECK(audit_ii_witness(w, *tau, start, &a).empty());

  auto open_none = strategy_II_from_open(fair, SetExpr::empty(), R(0));
  const Position s0 = Position::start_g(R(0), fair);
  w = extract_tree(*open_none, s0, R(1, 4), 4);
  for (std::size_t n = 0; n <= 4; ++n) {
    CHECK(w.tree_level(n, fair).size() == (std::size_t{1} << n));
    CHECK(complement_frontier(w, n, fair) == R(0));
  }
  CHECK(audit_ii_witness(w, *open_none, s0, nullptr).empty());
  // Deeper, the all-ones branch keeps its whole mass and eventually saturates.
  w = extract_tree(*open_none, s0, R(1, 4), 8);
  for (std::size_t n = 0; n <= 8; ++n) CHECK(complement_frontier(w, n, fair) <= R(1, 4));
  CHECK(audit_ii_witness(w, *open_none, s0, nullptr).empty());
}

TEST_CASE("decide by measure") {
  const auto fair = DyadicMeasure::fair();
  const SetExpr one = SetExpr::clopen({Node("1")});
  Decision d = decide_by_measure(fair, one, R(1, 4));
  CHECK(d.winner == Certificate::Player::kI);
  CHECK(audit_i_witness(*d.certificate.i_witness, fair, &one).empty());
  d = decide_by_measure(fair, one, R(1, 2));
  CHECK(d.winner == Certificate::Player::kII);
  CHECK(audit_ii_witness(*d.certificate.ii_witness, *d.strategy_ii, Position::start_g(R(1, 2), fair), &one).empty());
  const SetExpr not11 = SetExpr::complement(SetExpr::clopen({Node("11")}));
  d = decide_by_measure(DyadicMeasure::bernoulli(R(1, 3)), not11, R(1, 10));
  CHECK(d.winner == Certificate::Player::kI);
  CHECK(d.complement_mass == R(1, 9));
  CHECK_THROWS(decide_by_measure(fair, SetExpr::avoid_substring(Node("11")), R(0)));
}

TEST_CASE("grid minimax examples") {
  const auto fair = DyadicMeasure::fair();
  GridResult g = grid_minimax(fair, SetExpr::clopen({Node("1")}), R(1, 4), 8, 2);
  CHECK(g.i_wins);
  // Margin 1/4 sits exactly on the 2/Q band edge.
  CHECK(g.resolution_limited);
  CHECK_FALSE(grid_minimax(fair, SetExpr::clopen({Node("1")}), R(1, 4), 16, 2).resolution_limited);
  for (const Rational& s : {R(0), R(1, 3), R(9, 10)}) {
    CHECK(grid_minimax(fair, SetExpr::empty(), s, 16, 3).i_wins);
    CHECK_FALSE(grid_minimax(fair, SetExpr::full(), s, 16, 3).i_wins);
  }
}

TEST_CASE("player swap") {
  const auto fair = DyadicMeasure::fair();
  const SetExpr one = SetExpr::clopen({Node("1")});
  const Decision d = decide_by_measure(fair, one, R(1, 4));
  SwapResult sw = swap_I_to_II(*d.strategy_i, fair, one, R(1, 4), 3);
  REQUIRE(sw.audit.empty());
  CHECK(sw.target_stake == R(3, 4));
  const SetExpr zero = SetExpr::clopen({Node("0")});
  for (const auto& opp : adversaries_I(zero, 500)) {
    const Trace t = referee(*opp, *sw.strategy_ii, Position::start_g(R(3, 4), fair), Payoff::of_set(zero), 6);
    CHECK(t.outcome == Outcome::kIIDecided);
  }

  auto full_tau = strategy_II_from_open(fair, SetExpr::empty(), R(0));
  sw = swap_II_to_I(*full_tau, fair, SetExpr::full(), R(1, 4), R(1, 4), 4);
  REQUIRE(sw.audit.empty());
  CHECK(sw.target_stake == R(3, 4));
  for (const auto& opp : adversaries_II(SetExpr::empty(), 900)) {
    const Trace t = referee(*sw.strategy_i, *opp, Position::start_g(R(3, 4), fair),
                            Payoff::of_set(SetExpr::empty()), 6);
    CHECK(t.outcome == Outcome::kIDecided);
    CHECK_FALSE(t.violation);
  }
}

TEST_CASE("intersection of II strategies") {
  const auto fair = DyadicMeasure::fair();
  auto full_tau = strategy_II_from_open(fair, SetExpr::empty(), R(0));
  IntersectResult ir = intersect_strategies({{R(0), full_tau, std::nullopt}, {R(0), full_tau, std::nullopt}},
                                            fair, R(1, 2), 4);
  REQUIRE(ir.audit.empty());
  CHECK(ir.cover_mass == R(0));

  const SetExpr no00 = SetExpr::complement(SetExpr::clopen({Node("00")}));
  const SetExpr no11 = SetExpr::complement(SetExpr::clopen({Node("11")}));
  auto t1 = strategy_II_from_open(fair, SetExpr::clopen({Node("00")}), R(1, 4));
  auto t2 = strategy_II_from_open(fair, SetExpr::clopen({Node("11")}), R(1, 4));
  ir = intersect_strategies({{R(1, 4), t1, no00}, {R(1, 4), t2, no11}}, fair, R(3, 5), 4);
  REQUIRE(ir.audit.empty());
  CHECK(ir.cover_mass <= R(3, 5));
  const SetExpr both = SetExpr::intersection({no00, no11});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomI opp(seed);
    const Trace t = referee(opp, *ir.strategy, Position::start_g(R(3, 5), fair), Payoff::of_set(both), 8);
    CHECK_FALSE(t.violation);
    CHECK(t.outcome != Outcome::kIDecided);
  }
}

TEST_CASE("rationalized II strategy") {
  const auto fair = DyadicMeasure::fair();
  auto tau = strategy_II_from_open(fair, SetExpr::clopen({Node("00")}), R(1, 4));
  auto rt = rationalize_strategy(tau, R(1, 10));
  const Position root = Position::start_g(R(1, 2), fair);
  auto approx = rt->approximate(root, offer({R(1, 3), R(1, 3)}));
  REQUIRE(approx);
  for (const Rational& m : approx->masses) {
    CHECK(m > R(3, 10));
    CHECK(m < R(1, 3));
  }
  CHECK(approx->total() > R(54, 100));
  approx = rt->approximate(Position::start_g(R(1, 4), fair), offer({R(2, 5), R(0)}));
  REQUIRE(approx);
  CHECK(approx->masses[1] == R(0));
  CHECK_FALSE(rt->approximate(root, offer({R(26, 100), R(26, 100)})));

  // Offers with large denominators stand in for real numbers.
  const Rational tiny(1, 1000003);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomI opp(seed);
    Position p = Position::start_g(R(1, 4), fair);
    for (int k = 0; k < 6; ++k) {
      auto mv = opp.move(p);
      if (p.at_root()) {
        mv->masses[0] += tiny;
      } else if (mv->masses[0].sign() > 0 && mv->masses[1].sign() > 0) {
        mv->masses[0] += tiny;
        mv->masses[1] -= tiny;
      }
      if (validate_move(p, *mv)) break;
      if (p.at_root() && !(R(9, 10) * mv->total() > p.stake())) {
        CHECK_FALSE(rt->reply(p, *mv));
        break;
      }
      auto paired = rt->paired(p);
      REQUIRE(paired);
      auto inner = rt->approximate(*paired, *mv);
      REQUIRE(inner);
      CHECK_FALSE(validate_move(*paired, *inner));
      auto reply = rt->reply(p, *mv);
      REQUIRE(reply);
      CHECK(*reply == *tau->reply(*paired, *inner));
      CHECK_FALSE(validate_move(p, *mv, *reply));
      p = p.after(*mv, *reply);
    }
  }
}
