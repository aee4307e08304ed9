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
#include "mgame/fubini.hpp"

using namespace mgame;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }
Node N(const char* s) { return Node(s); }

ProductMeasure fair2() { return {DyadicMeasure::fair(), DyadicMeasure::fair()}; }

Position play(const StrategyI& one, const StrategyII& two, Position p, std::size_t rounds) {
  for (std::size_t r = 0; r < rounds; ++r) {
    const auto mv = one.move(p);
    REQUIRE(mv);
    REQUIRE_FALSE(validate_move(p, *mv));
    const auto reply = two.reply(p, *mv);
    REQUIRE(reply);
    REQUIRE(mv->masses[reply->side].sign() > 0);
    p = p.after(*mv, *reply);
  }
  return p;
}

// Random measure whose depth-2 table may have zero cells.
DyadicMeasure gappy(std::mt19937_64& rng) {
  std::vector<Rational> w(4);
  Rational sum;
  for (auto& x : w) {
    x = Rational(static_cast<long>(rng() % 3));
    sum += x;
  }
  if (sum.is_zero()) {
    w[rng() % 4] = R(1);
    sum = R(1);
  }
  for (auto& x : w) x /= sum;
  return DyadicMeasure::explicit_table(2, w, R(1, 2));
}

}  // namespace

TEST_CASE("product sets") {
  const ProductMeasure mu = fair2();
  const Clopen zero = Clopen::cylinder(N("0"));
  const Clopen a = product_set(zero, zero);
  CHECK(product_mass(a, mu) == R(1, 4));
  CHECK(product_mass_within(a, mu, {N("0"), N("1")}) == R(0));
  CHECK(product_mass_within(a, mu, {N("00"), N("01")}) == R(1, 16));
  CHECK(section_at(a, N("0")) == zero);
  CHECK(section_at(a, N("1")).is_empty());
  CHECK(column_at(a, N("0")) == zero);
  const ProductMeasure skew{DyadicMeasure::bernoulli(R(1, 3)), DyadicMeasure::fair()};
  CHECK(product_mass(product_set(Clopen::cylinder(N("1")), Clopen::cylinder(N("01"))), skew) ==
        R(1, 12));
  CHECK(product_cylinder(N("01"), N("1")) == Clopen::cylinder(N("011")));
}

TEST_CASE("four-quadrant cover strategy") {
  const ProductMeasure mu = fair2();
  const Clopen zero = Clopen::cylinder(N("0"));
  const Clopen a = product_set(zero, zero);
  auto tau = strategy_II_from_open_g2(mu, a, R(1, 2));
  CHECK_THROWS(strategy_II_from_open_g2(mu, a, R(1, 5)));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomI opp(seed);
    const Position end = play(opp, *tau, Position::start_g2(R(1, 2), mu.first, mu.second), 5);
    CHECK(a.classify(end.payoff_node()) == Cover::kOutside);
  }
}

TEST_CASE("shrinking cover avoids the zero pair") {
  const ProductMeasure mu = fair2();
  auto tau = avoid_zero_pair(mu);
  CHECK(*tau->index_for(R(1, 2)) == 1);
  CHECK(*tau->index_for(R(1, 4)) == 2);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomI opp(seed);
    const Position end = play(opp, *tau, Position::start_g2(R(0), mu.first, mu.second), 8);
    const std::size_t k = *tau->index_for(end.history().front().offer.total());
    if (k <= 8) CHECK(product_cylinder(Node(std::string(k, '0')), Node(std::string(k, '0')))
                          .classify(end.payoff_node()) == Cover::kOutside);
  }
  const auto d = tau->exact_delta(Position::start_g2(R(0), mu.first, mu.second), R(0));
  for (const Rational& x : d) CHECK(x.is_zero());
}

TEST_CASE("null sections of the full set") {
  const ProductMeasure mu = fair2();
  auto tau = strategy_II_from_open_g2(mu, Clopen::empty(), R(0));
  auto sigma = fub1_transform(tau, mu, R(1, 4));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomI opp(seed);
    const Position end = play(opp, *sigma, Position::start_g(R(0), mu.first), 5);
    const SectionAudit au = audit_sections(*sigma, end);
    for (const auto& f : au.failures) MESSAGE(f);
    CHECK(au.failures.empty());
    for (std::size_t n = 0; n < au.live.size(); ++n) CHECK(au.live[n].size() == (1u << n));
    CHECK(au.tree.is_full());
  }
}

TEST_CASE("null sections avoiding the zero pair") {
  const ProductMeasure mu = fair2();
  auto sigma = fub1_transform(avoid_zero_pair(mu), mu, R(1, 4));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    RandomI opp(seed);
    const Position end = play(opp, *sigma, Position::start_g(R(0), mu.first), 6);
    const SectionAudit au = audit_sections(*sigma, end);
    for (const auto& f : au.failures) MESSAGE(f);
    CHECK(au.failures.empty());
    CHECK(au.frontier.back() < R(1, 4));
    CHECK((~au.tree).mass(mu.second) < R(1, 4));
    for (const auto& rd : sigma->context(end)->rounds) CHECK(rd.q_sum < rd.bound);
  }
}

TEST_CASE("positive sections") {
  CHECK(fub2_beta(R(1, 2), R(1, 4)) == R(1, 3));
  CHECK_THROWS(fub2_beta(R(1, 4), R(1, 2)));
  const ProductMeasure mu = fair2();
  const Clopen zero = Clopen::cylinder(N("0"));
  const Clopen a = product_set(zero, zero);
  auto tau = strategy_II_from_open_g2(mu, a, R(1, 2));
  auto sigma = fub2_transform(tau, mu, R(1, 2), R(1, 4));
  CHECK(sigma->factor() == R(2, 3));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    RandomI opp(seed);
    const Position end = play(opp, *sigma, Position::start_g(R(3, 4), mu.first), 6);
    const SectionAudit au = audit_sections(*sigma, end);
    for (const auto& f : au.failures) MESSAGE(f);
    CHECK(au.failures.empty());
    for (std::size_t n = 1; n < au.frontier.size(); ++n) CHECK(au.frontier[n] <= R(2, 3));
    const Rational kept = au.tree.mass(mu.second);
    CHECK(kept >= R(1, 3));
    // The tree avoids A's section, and I can play into it.
    CHECK((au.tree & section_at(a, end.node())).is_empty());
    auto into = strategy_I_from_closed(mu.second, SetExpr::clopen(au.tree), R(0), R(1, 2));
    CHECK(into);
  }

  auto trivial = strategy_II_from_open_g2(mu, Clopen::empty(), R(1, 2));
  auto sigma0 = fub2_transform(trivial, mu, R(1, 2), R(1, 4));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    RandomI opp(seed);
    const Position end = play(opp, *sigma0, Position::start_g(R(3, 4), mu.first), 5);
    CHECK(audit_sections(*sigma0, end).failures.empty());
  }
}

TEST_CASE("fubini check") {
  const ProductMeasure mu = fair2();
  FubiniReport r = fubini_check(mu, Clopen::empty(), 2);
  CHECK(r.null_product);
  CHECK(r.null_rows);
  CHECK(r.null_columns);
  CHECK(r.consistent);

  const Clopen zero = Clopen::cylinder(N("0"));
  r = fubini_check(mu, product_set(zero, zero), 1);
  CHECK(r.product_mass == R(1, 4));
  CHECK_FALSE(r.null_product);
  CHECK(r.heavy_row_mass == R(1, 2));
  CHECK(r.heavy_rows == std::vector<Node>{N("0")});
  CHECK(r.consistent);

  std::mt19937_64 rng(5);
  int null_cases = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const ProductMeasure m{gappy(rng), gappy(rng)};
    std::vector<Node> cells;
    const std::size_t count = 1 + rng() % 5;
    for (std::size_t c = 0; c < count; ++c) {
      std::string bits;
      const std::size_t len = rng() % 9;
      for (std::size_t i = 0; i < len; ++i) bits.push_back(static_cast<char>('0' + rng() % 2));
      cells.push_back(Node(bits));
    }
    const FubiniReport fr = fubini_check(m, Clopen::from_nodes(cells), 4);
    CHECK(fr.consistent);
    if (fr.null_product) ++null_cases;
  }
  CHECK(null_cases > 0);
}
