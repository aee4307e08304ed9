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
#include "mgame/clopen.hpp"
#include "mgame/events.hpp"
#include "mgame/measure.hpp"
#include "mgame/rational.hpp"
#include "mgame/scaled_measure.hpp"
#include "mgame/set_expr.hpp"

using namespace mgame;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

// Brute force: the smallest denominator with a numerator strictly inside
// (lo, hi), smallest such numerator.
Rational brute_simplest(const Rational& lo, const Rational& hi) {
  for (long q = 1;; ++q) {
    const Rational scaled = lo * Rational(q);
    // Smallest integer p with p/q > lo.
    long p = scaled.floor().num().get_si() + 1;
    if (Rational(p, q) < hi) return Rational(p, q);
  }
}

std::vector<Node> all_nodes(std::size_t depth) {
  std::vector<Node> out{Node()};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() < depth) {
      out.push_back(out[i].child(0));
      out.push_back(out[i].child(1));
    }
  }
  return out;
}

std::vector<DyadicMeasure> sample_measures() {
  return {DyadicMeasure::fair(), DyadicMeasure::bernoulli(R(1, 3)),
          DyadicMeasure::bernoulli(R(0)),
          DyadicMeasure::atoms({{Node("01"), Node("1"), R(1, 2)},
                                {Node(""), Node("0"), R(1, 4)},
                                {Node("1"), Node("10"), R(1, 4)}}),
          DyadicMeasure::explicit_table(2, {R(1, 10), R(2, 10), R(3, 10), R(4, 10)}, R(1, 3))};
}

std::vector<Node> random_antichain(std::mt19937_64& rng, std::size_t depth) {
  std::vector<Node> out;
  std::bernoulli_distribution coin(0.5);
  for (const Node& t : all_nodes(depth)) {
    if (t.size() == depth && coin(rng)) out.push_back(t);
  }
  return out;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == R(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(4).str() == "4/1");
  CHECK(Rational::parse("6/8") == R(3, 4));
  CHECK(Rational::parse("-3") == R(-3));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK(Rational::parse(R(7, 9).str()) == R(7, 9));
}

TEST_CASE("simplest rational matches brute-force search") {
  CHECK(simplest_between(R(3, 8), R(1, 2)) == R(2, 5));
  CHECK(simplest_between(R(0), R(1)) == R(1, 2));
  CHECK(simplest_between(R(-1, 3), R(1, 5)) == R(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> den(1, 60), num(-80, 80);
  int checked = 0;
  while (checked < 3000) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    if (a.sign() < 0 && b.sign() > 0) continue;  // brute force scans upward only
    const Rational got = simplest_between(a, b);
    CHECK(a < got);
    CHECK(got < b);
    if (a.sign() >= 0) CHECK(got == brute_simplest(a, b));
    ++checked;
  }
}

TEST_CASE("cylinder masses") {
  CHECK(DyadicMeasure::fair().mass(Node("01")) == R(1, 4));
  CHECK(DyadicMeasure::bernoulli(R(1, 3)).mass(Node("11")) == R(1, 9));
  auto point = DyadicMeasure::atoms({{Node(), Node("0"), R(1)}});
  CHECK(point.mass(Node("00")) == R(1));
  CHECK(point.mass(Node("01")) == R(0));
}

TEST_CASE("every measure is additive to depth 12") {
  for (const DyadicMeasure& mu : sample_measures()) {
    CHECK(mu.mass(Node()) == R(1));
    for (const Node& t : all_nodes(11)) {
      CHECK(mu.mass(t) == mu.mass(t.child(0)) + mu.mass(t.child(1)));
      CHECK(mu.mass(t).sign() >= 0);
    }
  }
}

TEST_CASE("invalid measures are rejected") {
  CHECK_THROWS(DyadicMeasure::bernoulli(R(3, 2)));
  CHECK_THROWS(DyadicMeasure::atoms({{Node(), Node("0"), R(1, 2)}}));
  CHECK_THROWS(DyadicMeasure::explicit_table(1, {R(1, 2), R(1, 3)}, R(1, 2)));
}

TEST_CASE("clopen algebra against node enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a_nodes = random_antichain(rng, 3);
    const auto b_nodes = random_antichain(rng, 4);
    const Clopen a = Clopen::from_nodes(a_nodes), b = Clopen::from_nodes(b_nodes);
    const auto in = [](const std::vector<Node>& ns, const Node& x) {
      for (const Node& n : ns) {
        if (n.is_prefix_of(x)) return true;
      }
      return false;
    };
    for (const Node& x : all_nodes(4)) {
      if (x.size() != 4) continue;
      const bool ia = in(a_nodes, x), ib = in(b_nodes, x);
      CHECK(((a & b).classify(x) == Cover::kInside) == (ia && ib));
      CHECK(((a | b).classify(x) == Cover::kInside) == (ia || ib));
      CHECK(((~a).classify(x) == Cover::kInside) == !ia);
    }
    for (const DyadicMeasure& mu : sample_measures()) {
      CHECK(a.mass(mu) + (~a).mass(mu) == R(1));
      CHECK((a | b).mass(mu) + (a & b).mass(mu) == a.mass(mu) + b.mass(mu));
      Rational direct;
      for (const Node& n : a.antichain()) direct += mu.mass(n);
      CHECK(direct == a.mass(mu));
    }
  }
}

TEST_CASE("set measure bounds") {
  const auto fair = DyadicMeasure::fair();
  auto b = SetExpr::clopen({Node("0")}).bounds(fair, 1);
  CHECK(b.lower == R(1, 2));
  CHECK(b.upper == R(1, 2));
  b = SetExpr::complement(SetExpr::clopen({Node("00")})).bounds(fair, 2);
  CHECK(b.lower == R(3, 4));
  CHECK(b.upper == R(3, 4));
  // Depth-4 strings without "11" number F(6) = 8.
  const SetExpr avoid = SetExpr::avoid_substring(Node("11"));
  b = avoid.bounds(fair, 4);
  CHECK(b.upper == R(8, 16));
  CHECK(b.lower <= R(1, 2));
  CHECK_FALSE(b.truncated);
}

TEST_CASE("bounds are monotone in depth") {
  const auto fair = DyadicMeasure::fair();
  const std::vector<SetExpr> sets{
      SetExpr::avoid_substring(Node("11")), SetExpr::contains_substring(Node("101")),
      SetExpr::unite({SetExpr::avoid_substring(Node("00")), SetExpr::clopen({Node("1")})}),
      SetExpr::complement(SetExpr::avoid_substring(Node("010")))};
  for (const SetExpr& s : sets) {
    for (const DyadicMeasure& mu : {fair, DyadicMeasure::bernoulli(R(1, 3))}) {
      auto prev = s.bounds(mu, 0);
      for (std::size_t d = 1; d <= 8; ++d) {
        auto cur = s.bounds(mu, d);
        CHECK(cur.lower >= prev.lower);
        CHECK(cur.upper <= prev.upper);
        CHECK(cur.lower <= cur.upper);
        prev = cur;
      }
    }
  }
}

TEST_CASE("limsup truncation is flagged") {
  const auto fair = DyadicMeasure::fair();
  const SetExpr ls = SetExpr::limsup(EventFamily::coordinate(1), 3);
  const auto b = ls.bounds(fair, 5);
  CHECK(b.truncated);
  // ⋂_{m<=3} ⋃_{m<=i<=3} {x_i = 1} = {x_3 = 1}.
  CHECK(b.lower == R(1, 2));
  CHECK(b.upper == R(1, 2));
  CHECK(SetExpr::complement(ls).truncated());
}

TEST_CASE("clopen antichain validation") {
  CHECK_THROWS(SetExpr::clopen({Node("0"), Node("01")}));
}

TEST_CASE("scaled measure validation") {
  const auto fair = DyadicMeasure::fair();
  CHECK(validate_scaled_measure(ScaledMeasure::from_measure(fair), fair, 5).valid());

  auto bad = ScaledMeasure::from_table({{Node(), R(1)}, {Node("0"), R(1)}, {Node("1"), R(1)}}, 1, fair);
  auto report = validate_scaled_measure(bad, fair, 1);
  bool additive_at_root = false;
  for (const auto& v : report.violations) {
    if (v.invariant == "additive" && v.node == Node()) additive_at_root = true;
  }
  CHECK(additive_at_root);

  auto heavy = ScaledMeasure::from_table({{Node(), R(3, 4)}, {Node("0"), R(3, 4)}}, 1, fair);
  report = validate_scaled_measure(heavy, fair, 1);
  REQUIRE_FALSE(report.valid());
  bool dominated_at_0 = false;
  for (const auto& v : report.violations) {
    if (v.invariant == "dominated" && v.node == Node("0")) dominated_at_0 = true;
  }
  CHECK(dominated_at_0);

  auto zero = ScaledMeasure::from_table({}, 0, fair);
  report = validate_scaled_measure(zero, fair, 2);
  CHECK(report.violations.front().invariant == "root_positive");
}

TEST_CASE("pruning examples") {
  const auto fair = DyadicMeasure::fair();
  auto pr = prune_scaled_measure(ScaledMeasure::from_measure(fair), fair, R(1, 2), 6);
  CHECK(pr.removed.empty());
  CHECK(pr.measure(Node("0101")) == R(1, 16));

  auto left = ScaledMeasure::from_table({{Node(), R(1, 2)}, {Node("0"), R(1, 2)}}, 1, fair);
  pr = prune_scaled_measure(left, fair, R(1, 4), 1);
  CHECK(pr.removed == std::vector<Node>{Node("1")});
  CHECK(pr.measure.root() == R(1, 2));
  CHECK_THROWS(prune_scaled_measure(left, fair, R(1, 2), 1));
}

TEST_CASE("pruning keeps a valid scaled measure above the floor") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> frac(0, 8);
  const auto fair = DyadicMeasure::fair();
  for (int trial = 0; trial < 40; ++trial) {
    // Random scaled measure: each node keeps a random share of its cap.
    std::map<Node, Rational> table{{Node(), R(frac(rng) + 1, 10)}};
    for (const Node& t : all_nodes(5)) {
      if (t.size() == 5) continue;
      const Rational m = table[t];
      const Rational c0 = fair.mass(t.child(0)), c1 = fair.mass(t.child(1));
      const Rational lo = max(R(0), m - c1), hi = min(m, c0);
      const Rational m0 = lo + (hi - lo) * R(frac(rng), 8);
      table[t.child(0)] = m0;
      table[t.child(1)] = m - m0;
    }
    auto m = ScaledMeasure::from_table(table, 5, fair);
    REQUIRE(validate_scaled_measure(m, fair, 6).valid());
    const Rational eps = m.root() * R(frac(rng) + 1, 10);
    auto pr = prune_scaled_measure(m, fair, eps, 6);
    CHECK(pr.measure.root() > m.root() - eps);
    CHECK(validate_scaled_measure(pr.measure, fair, 6).valid());
    for (const Node& t : all_nodes(6)) {
      if (pr.measure(t).sign() > 0) CHECK(m(t) >= eps * fair.mass(t));
    }
  }
}
