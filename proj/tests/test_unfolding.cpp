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
#include <set>

#include "doctest.h"
#include "mgame/adversary.hpp"
#include "mgame/referee.hpp"
#include "mgame/unfolding.hpp"

using namespace mgame;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

Rational mass_of(const DyadicMeasure& mu, const std::vector<Node>& nodes) {
  Rational m;
  for (const Node& f : nodes) m += mu.mass(f);
  return m;
}

StrategyIIPtr avoid_nothing(const DyadicMeasure& mu) {
  return strategy_II_from_open(mu, SetExpr::empty(), R(0));
}

// II for R = {y_0 = x_0}: the first digit copies the first side.
StrategyIIPtr copy_first(const DyadicMeasure& mu) {
  return std::make_shared<DigitsII>(
      avoid_nothing(mu),
      [](const Position& pos, int side) -> std::optional<int> {
        if (pos.y_digits().empty()) return side;
        return std::nullopt;
      },
      "copy-first");
}

}  // namespace

TEST_CASE("reveal words: shortlex with prefixes first") {
  const auto w = reveal_words(2, 2);
  REQUIRE(w.size() == 6);
  CHECK(w[0] == YWord{0});
  CHECK(w[1] == YWord{1});
  CHECK(w[2] == YWord{0, 0});
  CHECK(w[5] == YWord{1, 1});
  const auto big = reveal_words(3, 3);
  CHECK(big.size() == 3u + 9u + 27u);
  for (std::size_t i = 0; i < big.size(); ++i) {
    for (std::size_t j = i + 1; j < big.size(); ++j) {
      CHECK_FALSE((is_prefix(big[j], big[i]) && big[j] != big[i]));
    }
  }
}

TEST_CASE("projection forwards mass moves and drops digits") {
  const auto fair = DyadicMeasure::fair();
  auto plain = avoid_nothing(fair);
  auto proj_plain = project_strategy_II(plain, 2);
  auto proj_copy = project_strategy_II(copy_first(fair), 2);
  for (const auto& opp : adversaries_I(SetExpr::empty(), 40, 20)) {
    Position g = Position::start_g(R(0), fair);
    Position un = Position::start_unfolded(R(0), fair, 2);
    for (int round = 0; round < 8; ++round) {
      auto mv = opp->move(g);
      REQUIRE(mv);
      REQUIRE_FALSE(validate_move(g, *mv));
      auto a = plain->reply(g, *mv);
      auto b = proj_plain->reply(g, *mv);
      auto c = proj_copy->reply(g, *mv);
      auto direct = copy_first(fair)->reply(un, *mv);
      REQUIRE(a);
      REQUIRE(b);
      REQUIRE(c);
      REQUIRE(direct);
      CHECK(*a == *b);
      CHECK_FALSE(c->y);
      CHECK(c->side == direct->side);
      CHECK_FALSE(validate_move(g, *mv, *c));
      auto replayed = proj_copy->unfolded(g);
      REQUIRE(replayed);
      CHECK(replayed->history() == un.history());
      g = g.after(*mv, *c);
      un = un.after(*mv, *direct);
    }
    CHECK(un.y_digits() == YWord{un.node()[0]});
  }
}

TEST_CASE("uniformize: first digit copies the first bit") {
  const auto fair = DyadicMeasure::fair();
  const PairTree rel = PairTree::first_digit_match(2);
  auto t = uniformize(copy_first(fair), rel, fair, R(1, 4), 8);
  CHECK(t.audit.empty());
  CHECK(t.complement <= R(1, 4));
  REQUIRE(t.digits.count(Node()));
  CHECK(t.digits.at(Node()).empty());
  std::size_t checked = 0;
  for (const auto& [u, y] : t.digits) {
    if (u.empty()) continue;
    CHECK(y == YWord{u[0]});
    ++checked;
  }
  CHECK(checked > 8);

  auto wrong = std::make_shared<DigitsII>(
      avoid_nothing(fair),
      [](const Position& pos, int side) -> std::optional<int> {
        if (pos.y_digits().empty()) return 1 - side;
        return std::nullopt;
      },
      "copy-flipped");
  auto bad = uniformize(wrong, rel, fair, R(1, 4), 3);
  CHECK_FALSE(bad.audit.empty());
}

TEST_CASE("uniformize: full relation, zeros every round") {
  const auto fair = DyadicMeasure::fair();
  auto zeros = std::make_shared<DigitsII>(
      avoid_nothing(fair), [](const Position&, int) -> std::optional<int> { return 0; },
      "zeros");
  auto t = uniformize(zeros, PairTree::full(2), fair, R(1, 4), 6);
  CHECK(t.audit.empty());
  for (const auto& [u, y] : t.digits) CHECK(y == YWord(u.size(), 0));
}

TEST_CASE("stabilize: y-blind sigma keeps S") {
  const auto fair = DyadicMeasure::fair();
  auto sigma = strategy_I_from_closed(fair, SetExpr::clopen({Node("0"), Node("10")}), R(1, 2),
                                      R(1, 8));
  const Position start = Position::start_unfolded(R(1, 2), fair, 2);
  std::vector<Node> s;
  for (const Node& f : level(5)) {
    if (f[0] == 0 || (f[0] == 1 && f[1] == 0)) s.push_back(f);
  }
  auto st = stabilize(*sigma, start, s, R(1, 4), R(1, 8), 1, 5);
  REQUIRE_FALSE(st.error);
  CHECK(st.iterations == 0);
  CHECK(st.reveal_at.size() == s.size());
  for (const auto& [f, a] : st.reveal_at) CHECK(a == Node());
  CHECK(st.disjoint);
}

TEST_CASE("stabilize: reveal-sensitive sigma routes through right subtrees") {
  const auto fair = DyadicMeasure::fair();
  const std::size_t d = 6;
  RevealSensitiveI sigma(fair, R(3, 8), 0);
  const Position start = Position::start_unfolded(R(1, 4), fair, 2);
  auto st = stabilize(sigma, start, level(d), R(1, 4), R(1, 8), 0, d);
  REQUIRE_FALSE(st.error);
  // Each iteration covers half of what is left, until the exits reach depth
  // d, where a reveal cannot kill anything inside the window.
  REQUIRE(st.masses.size() == 4);
  CHECK(st.masses[0] == R(1, 2));
  CHECK(st.masses[1] == R(3, 4));
  CHECK(st.masses[2] == R(7, 8));
  CHECK(st.masses[3] == R(1));
  CHECK(st.reveal_at.at(Node("011111")) == Node());
  CHECK(st.reveal_at.at(Node("000111")) == Node("00"));
  CHECK(st.reveal_at.at(Node("001011")) == Node("0010"));
  CHECK(st.reveal_at.at(Node("001000")) == Node("001000"));
  for (const auto& [f, a] : st.reveal_at) {
    if (a.size() == d) continue;
    auto p = follow(sigma, start, f, {{a, 0}});
    REQUIRE(p);
    CHECK(p->y_digits() == YWord{0});
    CHECK(p->mass().sign() > 0);
  }
  // The other digit changes nothing.
  auto other = stabilize(sigma, start, level(d), R(1, 4), R(1, 8), 1, d);
  REQUIRE_FALSE(other.error);
  CHECK(other.iterations == 0);
}

TEST_CASE("stabilize: reveal-sensitive family, random floors") {
  const auto fair = DyadicMeasure::fair();
  std::mt19937_64 rng(77);
  const std::size_t d = 6;
  for (int trial = 0; trial < 30; ++trial) {
    const Rational c = R(std::uniform_int_distribution<int>(5, 11)(rng), 24);
    const Rational beta = R(1, 1L << std::uniform_int_distribution<int>(1, 6)(rng));
    RevealSensitiveI sigma(fair, c, trial % 2);
    const Position start = Position::start_unfolded(c / R(2), fair, 2);
    std::vector<Node> s;
    for (const Node& f : level(d)) {
      if (std::uniform_int_distribution<int>(0, 3)(rng) != 0) s.push_back(f);
    }
    auto st = stabilize(sigma, start, s, c / R(4), beta, 0, d);
    REQUIRE_FALSE(st.error);
    CHECK(st.disjoint);
    Rational kept;
    for (const auto& [f, a] : st.reveal_at) {
      kept += fair.mass(f);
      CHECK(a.is_prefix_of(f));
      CHECK(std::find(s.begin(), s.end(), f) != s.end());
    }
    CHECK(kept == st.masses.back());
    CHECK(kept > (R(1) - beta) * mass_of(fair, s));
    std::set<Node> seen;
    for (const auto& out : st.outside) {
      for (const Node& v : out) {
        CHECK(seen.insert(v).second);
        CHECK(std::find(s.begin(), s.end(), v) == s.end());
      }
    }
  }
}

TEST_CASE("stabilize: floor violation is reported") {
  const auto fair = DyadicMeasure::fair();
  RevealSensitiveI sigma(fair, R(3, 8), 0);
  const Position start = Position::start_unfolded(R(1, 4), fair, 2);
  auto st = stabilize(sigma, start, level(4), R(1, 2), R(1, 8), 0, 4);
  REQUIRE(st.error);
  CHECK(st.error->find("floor") != std::string::npos);
}

TEST_CASE("unfold: y-blind sigma for the complement of 11") {
  const auto fair = DyadicMeasure::fair();
  const std::size_t d = 8;
  const SetExpr a = SetExpr::clopen({Node("11")});
  auto sigma = strategy_I_from_closed(fair, SetExpr::clopen(~Clopen::cylinder(Node("11"))),
                                      R(1, 2), R(1, 6));
  const Position start = Position::start_unfolded(R(1, 2), fair, 2);
  auto r = unfold_strategy_I(*sigma, start, 2, d);
  REQUIRE(r.audit.empty());
  REQUIRE(r.strategy);
  CHECK(r.delta > R(0));
  REQUIRE(r.level_mass.size() == d + 1);
  for (const Rational& m : r.level_mass) CHECK(m >= r.floor_mass);
  for (const auto& st : r.plan.steps) CHECK(st.mass_after > r.floor_mass);
  for (const Node& f : r.frontier) CHECK_FALSE(Node("11").is_prefix_of(f));
  CHECK(audit_reveals(*sigma, start, r, d).empty());

  const Position g = Position::start_g(R(1, 2), fair);
  for (const auto& opp : adversaries_II(a, 300)) {
    Trace t = referee(*r.strategy, *opp, g, Payoff::of_set(a), d);
    CHECK_MESSAGE(t.outcome == Outcome::kIDecided, opp->name());
  }
}

TEST_CASE("unfold: reveal-sensitive sigma keeps coherent canonical plays") {
  const auto fair = DyadicMeasure::fair();
  const std::size_t d = 6;
  RevealSensitiveI sigma(fair, R(3, 8), 0);
  const Position start = Position::start_unfolded(R(1, 4), fair, 2);
  auto r = unfold_strategy_I(sigma, start, 2, d);
  REQUIRE(r.audit.empty());
  CHECK(r.delta == R(1, 8));
  for (const Rational& m : r.level_mass) CHECK(m > R(1, 4) + R(1, 16));
  CHECK(audit_reveals(sigma, start, r, d).empty());
  // Some branch reveals 0 below the root.
  bool deep = false;
  for (const auto& [f, by_word] : r.plan.schedules) {
    auto it = by_word.find(YWord{0});
    if (it != by_word.end() && !it->second.front().first.empty()) deep = true;
  }
  CHECK(deep);
  CHECK(canonical_schedule(r.plan, Node(), YWord{}) == RevealSchedule{});
}

TEST_CASE("unfold: empty F keeps the pruned support") {
  const auto fair = DyadicMeasure::fair();
  auto sigma = strategy_I_from_closed(fair, SetExpr::full(), R(1, 3), R(1, 4));
  const Position start = Position::start_unfolded(R(1, 3), fair, 2);
  auto r = unfold_strategy_I(*sigma, start, 1, 5);
  REQUIRE(r.audit.empty());
  CHECK(r.frontier.size() == 32);
  CHECK(r.level_mass.back() > r.floor_mass);
}

TEST_CASE("unfold: stake not exceeded") {
  const auto fair = DyadicMeasure::fair();
  RevealSensitiveI sigma(fair, R(3, 8), 0);
  auto r = unfold_strategy_I(sigma, Position::start_unfolded(R(3, 8), fair, 2), 1, 4);
  REQUIRE_FALSE(r.audit.empty());
  CHECK_FALSE(r.strategy);
  CHECK_THROWS_AS(unfold_strategy_I(sigma, Position::start_g(R(0), fair), 1, 4),
                  std::invalid_argument);
}
