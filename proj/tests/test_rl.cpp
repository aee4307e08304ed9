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
#include "mgame/renyi_lamperti.hpp"

using namespace mgame;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
  const long den = 1 + static_cast<long>(rng() % max_den);
  return Rational(static_cast<long>(rng() % (max_num + 1)), den);
}

// {x : x_{i+shift} = 1} as an explicit antichain.
std::vector<Node> coordinate_nodes(std::size_t index) {
  std::vector<Node> out;
  for (const Node& p : level(index)) out.push_back(p.child(1));
  return out;
}

std::vector<Node> with_prefix(const std::vector<Node>& nodes, const Node& head) {
  std::vector<Node> out;
  for (const Node& n : nodes) out.push_back(head.concat(n));
  return out;
}

}  // namespace

TEST_CASE("min index bound") {
  IndexBound r = min_index_bound({R(1), R(1)}, {R(1), R(1)}, {R(1, 2), R(1, 2)});
  CHECK(r.value == R(1, 2));
  CHECK(r.bound == R(1, 2));
  r = min_index_bound({R(1), R(4)}, {R(1), R(2)}, {R(1, 2), R(1, 2)});
  CHECK(r.value == R(1, 2));
  CHECK(r.bound == R(5, 9));
  CHECK_THROWS(min_index_bound({R(1)}, {R(0)}, {R(1)}));
  CHECK_THROWS(min_index_bound({R(1), R(1)}, {R(1), R(1)}, {R(1, 2), R(1, 3)}));
  CHECK_THROWS(min_index_bound({R(1)}, {R(1), R(2)}, {R(1)}));
}

TEST_CASE("min index bound sweep") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<Rational> a, b, w;
    Rational wsum;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(random_rational(rng, 20, 9));
      b.push_back(random_rational(rng, 20, 9) + R(1, 50));
      w.push_back(random_rational(rng, 10, 1) + R(1, 7));
      wsum += w.back();
    }
    for (Rational& x : w) x /= wsum;
    const IndexBound r = min_index_bound(a, b, w);
    CHECK(r.value <= r.bound);
  }
}

TEST_CASE("delta for eta") {
  CHECK(delta_for_eta(R(1), R(1, 2)) == R(1, 8));
  CHECK(delta_for_eta(R(0), R(1, 2)) == R(1, 4));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Rational d = random_rational(rng, 30, 7);
    const Rational eta = random_rational(rng, 9, 10) + R(1, 1000);
    const Rational delta = delta_for_eta(d, eta);
    const Rational gap = eta - delta;
    CHECK(gap.sign() > 0);
    CHECK(gap * gap > delta * d);
    // The next larger power of two fails (or is 1, excluded).
    const Rational up = delta * R(2);
    if (up < R(1)) CHECK_FALSE(((eta - up).sign() > 0 && (eta - up) * (eta - up) > up * d));
  }
}

TEST_CASE("closed-form pair sums agree with the pairwise path") {
  std::mt19937_64 rng(3);
  const EventFamily fam1 = EventFamily::coordinate(1);
  const EventFamily fam0 = EventFamily::coordinate(0);
  for (int trial = 0; trial < 40; ++trial) {
    const DyadicMeasure mu = trial % 2 ? DyadicMeasure::fair() : DyadicMeasure::bernoulli(R(1, 3));
    const EventFamily& fam = trial % 3 ? fam1 : fam0;
    Node t;
    const std::size_t depth = rng() % 7;
    for (std::size_t i = 0; i < depth; ++i) t = t.child(static_cast<int>(rng() % 2));
    Clopen k = Clopen::full();
    std::size_t cut = 0;
    while (cut < 9 && rng() % 3) {
      const std::size_t next = cut + 1 + rng() % 3;
      k = k & fam.block_union(cut, next);
      cut = next;
    }
    const PairSums fast = pair_sums(fam, mu, t, k, cut, cut + 8);
    const PairSums slow = pair_sums_generic(fam, mu, t, k, cut, cut + 8);
    CHECK(fast.base_mass == slow.base_mass);
    CHECK(fast.a == slow.a);
    CHECK(fast.b == slow.b);
  }
}

TEST_CASE("coordinate family surrogate ratio") {
  const DyadicMeasure fair = DyadicMeasure::fair();
  const PairSums s = pair_sums(EventFamily::coordinate(1), fair, Node(), Clopen::full(), 0, 64);
  for (std::size_t k = 0; k < 64; ++k) {
    const Rational n(static_cast<long>(k + 1));
    CHECK(s.a[k] / (s.b[k] * s.b[k]) == (n / R(2) + (n * n - n) / R(4)) / (n * n / R(4)));
  }
  const Surrogate sur = evaluate_surrogate(s, R(1), R(0));
  CHECK(sur.ratio == R(65, 64));
  CHECK(sur.ratio >= R(1));
  CHECK(sur.ratio <= R(9, 8));
}

TEST_CASE("choose side examples") {
  const DyadicMeasure fair = DyadicMeasure::fair();
  RLConfig cfg;
  cfg.horizon = 6;
  // Events on coordinates 1..6 do not see the first bit.
  std::vector<std::vector<Node>> shifted;
  for (std::size_t i = 1; i <= 6; ++i) shifted.push_back(coordinate_nodes(i));
  RLContext root;
  root.mass = R(1, 2);
  SideChoice c = choose_side(EventFamily::list(shifted), fair, root, R(1, 4), R(1, 4), cfg);
  REQUIRE(c.ok);
  // Every candidate index is an exact tie, resolved toward side 0.
  CHECK(c.votes[1] == 0);
  CHECK(c.side == 0);

  // Coordinate events proper: A_0 sits inside N_1, so side 1 wins.
  cfg.horizon = 64;
  c = choose_side(EventFamily::coordinate(1), fair, root, R(1, 4), R(1, 4), cfg);
  REQUIRE(c.ok);
  CHECK(c.side == 1);

  // All event mass inside N_1.
  std::vector<std::vector<Node>> right;
  for (std::size_t i = 0; i < 6; ++i) right.push_back(with_prefix(coordinate_nodes(i), Node("1")));
  cfg.horizon = 6;
  root.mass = R(3, 5);
  c = choose_side(EventFamily::list(right), fair, root, R(3, 10), R(3, 10), cfg);
  REQUIRE(c.ok);
  CHECK(c.side == 1);
  CHECK(c.votes[0] == 0);

  RLContext low;
  low.mass = R(1, 1000);
  CHECK_FALSE(choose_side(EventFamily::coordinate(1), fair, low, R(1, 2000), R(1, 2000), RLConfig{}).ok);
}

TEST_CASE("choose side keeps the conclusion") {
  const DyadicMeasure fair = DyadicMeasure::fair();
  const EventFamily fam = EventFamily::coordinate(1);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    RLContext ctx;
    for (int i = 0; i < 3; ++i) ctx.node = ctx.node.child(static_cast<int>(rng() % 2));
    const Rational cell0 = fair.mass(ctx.node.child(0));
    const Rational m0 = cell0 * Rational(static_cast<long>(1 + rng() % 63), 64);
    const Rational m1 = cell0 * Rational(static_cast<long>(1 + rng() % 63), 64);
    ctx.mass = m0 + m1;
    ctx.cuts = {0, 3};
    ctx.committed = fam.block_union(0, 3);
    const SideChoice c = choose_side(fam, fair, ctx, m0, m1, RLConfig{});
    if (!c.ok) {
      CHECK_FALSE((c.parent.defined && c.parent.inha < R(1)));
      continue;
    }
    CHECK(c.child[c.side]->inha < R(1));
    CHECK(c.child[c.side]->divergence > R(0));
    CHECK(c.candidates > 0);
  }
}

TEST_CASE("commitment cutoff") {
  const DyadicMeasure fair = DyadicMeasure::fair();
  RLContext root;
  root.mass = R(3, 4);
  Cutoff cut = commitment_cutoff(EventFamily::coordinate(1), fair, root, RLConfig{});
  REQUIRE(cut.ok);
  CHECK(cut.cut == 1);
  CHECK(cut.after.inha < R(1));

  const EventFamily full = EventFamily::constant({Node()});
  const RLConfig cfg;
  const Surrogate before = evaluate_surrogate(
      pair_sums(full, fair, Node(), Clopen::full(), 0, cfg.horizon), R(1), R(3, 4));
  cut = commitment_cutoff(full, fair, root, cfg);
  REQUIRE(cut.ok);
  CHECK(cut.cut == 1);
  CHECK(cut.after.ratio == before.ratio);
  CHECK(cut.after.inha == before.inha);

  std::mt19937_64 rng(2);
  const EventFamily fam = EventFamily::coordinate(1);
  for (int trial = 0; trial < 100; ++trial) {
    RLContext ctx;
    ctx.node = Node(trial % 2 ? "01" : "11");
    ctx.mass = fair.mass(ctx.node) * Rational(static_cast<long>(8 + rng() % 56), 64);
    ctx.cuts = {0, 2};
    ctx.committed = fam.block_union(0, 2);
    cut = commitment_cutoff(fam, fair, ctx, cfg);
    if (!cut.ok) continue;
    const Clopen k = ctx.committed & fam.block_union(2, cut.cut);
    const Surrogate s = evaluate_surrogate(pair_sums(fam, fair, ctx.node, k, cut.cut, cfg.horizon),
                                           fair.mass(ctx.node), ctx.mass);
    CHECK(s.inha < R(1));
    CHECK(s.divergence > R(0));
    if (cut.cut > 3) {
      const Clopen k1 = ctx.committed & fam.block_union(2, cut.cut - 1);
      const Surrogate s1 = evaluate_surrogate(
          pair_sums(fam, fair, ctx.node, k1, cut.cut - 1, cfg.horizon), fair.mass(ctx.node), ctx.mass);
      CHECK_FALSE((s1.defined && s1.inha < R(1) && s1.divergence > R(0)));
    }
  }
}

TEST_CASE("rl strategy on coordinate events") {
  const DyadicMeasure fair = DyadicMeasure::fair();
  const EventFamily fam = EventFamily::coordinate(1);
  RLConfig cfg;
  cfg.horizon = 256;
  auto rl = rl_strategy(fam, fair, R(1), cfg);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    RandomI opp(seed);
    Position p = Position::start_g(R(0), fair);
    for (int r = 0; r < 20; ++r) {
      const auto mv = opp.move(p);
      const auto reply = rl->reply(p, *mv);
      REQUIRE(reply);
      p = p.after(*mv, *reply);
    }
    const auto st = rl->state(p);
    REQUIRE_FALSE(st->error);
    REQUIRE(st->rounds.size() == 20);
    for (const RLRound& rd : st->rounds) {
      CHECK(rd.after.inha < R(1));
      CHECK(rd.after.divergence > R(0));
      if (rd.played != rd.chosen) CHECK(rd.chosen_mass.is_zero());
    }
    const auto hit = blocks_hit(fam, fair, *st);
    REQUIRE(hit.size() == 20);
    for (bool h : hit) CHECK(h);
    for (std::size_t k = 0; k < 3; ++k) {
      const Clopen block = fam.block_union(st->ctx.cuts[k], st->ctx.cuts[k + 1]);
      if (block.depth() <= p.node().size()) CHECK(block.classify(p.node()) == Cover::kInside);
    }
  }
}

TEST_CASE("rl strategy on the full family") {
  const DyadicMeasure fair = DyadicMeasure::fair();
  const EventFamily full = EventFamily::constant({Node()});
  RLConfig cfg;
  cfg.horizon = 32;
  auto rl = rl_strategy(full, fair, R(1), cfg);
  CHECK(rl->root_surrogate().ratio == R(1));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    RandomI opp(seed);
    Position p = Position::start_g(R(0), fair);
    for (int r = 0; r < 12; ++r) {
      const auto mv = opp.move(p);
      const auto reply = rl->reply(p, *mv);
      REQUIRE(reply);
      p = p.after(*mv, *reply);
    }
    const auto st = rl->state(p);
    for (std::size_t k = 0; k < st->ctx.cuts.size(); ++k) CHECK(st->ctx.cuts[k] == k);
  }
}
