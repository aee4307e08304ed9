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

#include "doctest.h"
#include "mgame/adversary.hpp"
#include "mgame/decide.hpp"
#include "mgame/io.hpp"

using namespace mgame;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

template <class T, class From>
void round_trip(const T& x, From from) {
  const std::string text = dump(to_json(x));
  const T back = from(parse_json(text, "mem"), "$");
  CHECK(dump(to_json(back)) == text);
}

}  // namespace

TEST_CASE("json: rationals and measures") {
  CHECK(to_json(R(2, 4)) == "1/2");
  CHECK(to_json(R(3)) == "3/1");
  CHECK(rational_from(Json("6/4"), "$") == R(3, 2));
  CHECK_THROWS_AS(rational_from(Json("1/0"), "$.p"), JsonError);
  CHECK_THROWS_AS(rational_from(Json(3), "$.p"), JsonError);
  const std::vector<DyadicMeasure> ms = {
      DyadicMeasure::fair(), DyadicMeasure::bernoulli(R(1, 3)),
      DyadicMeasure::atoms({Atom{Node("01"), Node("1"), R(1, 2)}, Atom{Node(), Node("0"), R(1, 2)}}),
      DyadicMeasure::explicit_table(2, {R(1, 8), R(3, 8), R(0), R(1, 2)}, R(1, 3))};
  for (const auto& mu : ms) {
    round_trip(mu, measure_from);
    CHECK(measure_from(to_json(mu), "$") == mu);
  }
  round_trip(ProductMeasure{ms[1], ms[3]}, product_measure_from);
  CHECK(dump(to_json(ms[0])) == "{\n  \"kind\": \"fair\"\n}\n");
}

TEST_CASE("json: sets, families, pair trees") {
  const std::vector<SetExpr> sets = {
      SetExpr::clopen({Node("11"), Node("0")}),
      SetExpr::closed_tree({Node("00"), Node("01")}),
      SetExpr::avoid_substring(Node("11")),
      SetExpr::open_union({Node("1"), Node("01")}),
      SetExpr::contains_substring(Node("00")),
      SetExpr::limsup(EventFamily::coordinate(1), 8),
      SetExpr::complement(SetExpr::intersection(
          {SetExpr::clopen({Node("1")}), SetExpr::unite({SetExpr::clopen({Node("01")}),
                                                          SetExpr::clopen({Node("10")})})}))};
  for (const auto& s : sets) round_trip(s, set_from);
  round_trip(EventFamily::list({{Node("1")}, {Node("01"), Node("11")}}), family_from);
  round_trip(EventFamily::constant({Node("10")}), family_from);
  const std::vector<PairTree> trees = {
      PairTree::full(2), PairTree::empty(3), PairTree::x_clopen({Node("11")}, 2),
      PairTree::first_digit_match(2), PairTree::forbidden({{Node("0"), YWord{1}}}, 2)};
  for (const auto& t : trees) round_trip(t, pair_tree_from);
}

TEST_CASE("json: traces replay after a round trip") {
  const auto fair = DyadicMeasure::fair();
  const SetExpr a = SetExpr::clopen({Node("1")});
  auto dec = decide_by_measure(fair, a, R(1, 4));
  for (const auto& opp : adversaries_II(a, 10, 3)) {
    Trace t = referee(*dec.strategy_i, *opp, Position::start_g(R(1, 4), fair),
                      Payoff::of_set(a), 4);
    const Json j = to_json(t);
    const std::string text = dump(j);
    Trace back = trace_from(parse_json(text, "mem"), "$");
    CHECK(dump(to_json(back)) == text);
    CHECK(replay_matches(back));
  }
  // A rule violation is kept with the rejected offer.
  class Greedy : public StrategyI {
   public:
    std::optional<MoveI> move(const Position&) const override { return MoveI{{R(3, 4), R(0)}}; }
    std::string name() const override { return "too-much"; }
  } bad;
  Trace t = referee(bad, *adversaries_II(a, 1, 1).front(), Position::start_g(R(1, 4), fair),
                    Payoff::of_set(a), 4);
  REQUIRE(t.violation);
  round_trip(t, trace_from);
  Trace u = referee(*dec.strategy_i, RandomII(3),
                    Position::start_unfolded(R(1, 4), fair, 2),
                    Payoff::of_pairs(PairTree::x_clopen({Node("1")}, 2)), 6);
  round_trip(u, trace_from);
}

TEST_CASE("json: certificates, schedules, uniform tables") {
  const auto fair = DyadicMeasure::fair();
  const SetExpr a = SetExpr::clopen({Node("1")});
  round_trip(decide_by_measure(fair, a, R(1, 4)).certificate, certificate_from);
  round_trip(decide_by_measure(fair, a, R(1, 2)).certificate, certificate_from);
  round_trip(bc_divergence_blocks([](std::size_t) { return R(49, 100); },
                                  default_tolerances(R(1, 4)), 3, 100),
             schedule_from);
  auto tau = std::make_shared<DigitsII>(
      strategy_II_from_open(fair, SetExpr::empty(), R(0)),
      [](const Position& p, int side) -> std::optional<int> {
        return p.y_digits().empty() ? std::optional<int>(side) : std::nullopt;
      },
      "copy");
  auto table = uniformize(tau, PairTree::first_digit_match(2), fair, R(1, 4), 4);
  const std::string text = dump(to_json(table));
  auto digits = uniform_digits_from(parse_json(text, "mem"), "$");
  CHECK(digits == table.digits);
  CHECK(parse_json(text, "mem")["digits"]["01"] == "0");
}

TEST_CASE("json: diagnostics carry the path") {
  try {
    measure_from(parse_json(R"({"kind": "bernoulli", "p": "x"})", "mem"), "$.measure");
    FAIL("no throw");
  } catch (const JsonError& e) {
    CHECK(e.path() == "$.measure.p");
  }
  try {
    set_from(parse_json(R"({"kind": "union", "args": [{"kind": "clopen"}]})", "mem"), "$");
    FAIL("no throw");
  } catch (const JsonError& e) {
    CHECK(e.path() == "$.args[0].antichain");
  }
  CHECK_THROWS_AS(parse_json("{", "f.json"), JsonError);
  CHECK_THROWS_AS(expect_document(Json{{"format", "mgame.trace/2"}}, "trace"), JsonError);
  CHECK_THROWS_AS(start_from(parse_json(R"({"variant":"G","stake":"1/1","measure":{"kind":"fair"}})",
                                        "mem"),
                             "$"),
                  JsonError);
}
