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

#include "mgame/suites.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "mgame/adversary.hpp"
#include "mgame/decide.hpp"
#include "mgame/product.hpp"
#include "mgame/scaled_measure.hpp"
#include "mgame/strategies.hpp"

namespace mgame {

namespace {

class Prop {
 public:
  explicit Prop(std::string name) { r_.name = std::move(name); }
  void check(bool ok, const std::function<std::string()>& why) {
    ++r_.checked;
    if (!ok && r_.failures++ == 0) r_.counterexample = why();
  }
  PropertyResult done() const { return r_; }

 private:
  PropertyResult r_;
};

std::size_t pick(std::size_t given, std::size_t fallback) { return given ? given : fallback; }

std::string nodes_str(const std::vector<Node>& nodes) {
  std::string s = "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) s += (i ? ", \"" : "\"") + nodes[i].str() + "\"";
  return s + "}";
}

// fair, bernoulli(k/10) or a positive depth-3 table with a fair tail.
DyadicMeasure random_measure(std::mt19937_64& rng) {
  switch (rng() % 3) {
    case 0:
      return DyadicMeasure::fair();
    case 1:
      return DyadicMeasure::bernoulli(Rational(static_cast<long>(1 + rng() % 9), 10));
    default: {
      std::vector<Rational> w(8);
      Rational sum;
      for (auto& x : w) {
        x = Rational(static_cast<long>(1 + rng() % 5));
        sum += x;
      }
      for (auto& x : w) x /= sum;
      return DyadicMeasure::explicit_table(3, w, Rational(1, 2));
    }
  }
}

Node random_node(std::mt19937_64& rng, std::size_t min_len, std::size_t max_len) {
  std::string bits;
  const std::size_t len = min_len + rng() % (max_len - min_len + 1);
  for (std::size_t i = 0; i < len; ++i) bits.push_back(static_cast<char>('0' + rng() % 2));
  return Node(bits);
}

Clopen random_clopen(std::mt19937_64& rng, std::size_t max_depth) {
  std::vector<Node> cells;
  const std::size_t count = 1 + rng() % 6;
  for (std::size_t c = 0; c < count; ++c) cells.push_back(random_node(rng, 1, max_depth));
  return Clopen::from_nodes(cells);
}

struct Instance {
  DyadicMeasure mu;
  Clopen a;
  Rational s;
  Rational complement;
  std::string describe() const {
    return "mu = " + mu.describe() + ", A = " + nodes_str(a.antichain()) + ", s = " + s.str() +
           ", mu(A^c) = " + complement.str();
  }
};

// Stake on the 1/64 grid, redrawn until |mu(A^c) - s| > band.
Instance random_instance(std::mt19937_64& rng, std::size_t max_depth, const Rational& band) {
  for (;;) {
    Instance in{random_measure(rng), random_clopen(rng, max_depth), Rational(), Rational()};
    in.complement = (~in.a).mass(in.mu);
    for (int tries = 0; tries < 64; ++tries) {
      in.s = Rational(static_cast<long>(rng() % 64), 64);
      if ((in.complement - in.s).abs() > band) return in;
    }
  }
}

SuiteReport equiv_suite(const SuiteOptions& o) {
  const std::size_t cases = pick(o.cases, 200), depth = pick(o.depth, 6);
  const std::size_t adv = pick(o.adversaries, 100);
  std::mt19937_64 rng(o.seed.value_or(1));
  Prop winner("winner matches mu(A^c) vs s");
  Prop wins("winner defeats every adversary at the payoff depth");
  std::size_t runs = 0;
  std::vector<std::size_t> depths(depth + 1, 0);
  for (std::size_t i = 0; i < cases; ++i) {
    const Instance in = random_instance(rng, depth, Rational(0));
    const SetExpr a = SetExpr::clopen(in.a);
    const Decision dec = decide_by_measure(in.mu, a, in.s);
    const bool i_should = in.complement > in.s;
    winner.check((dec.winner == Certificate::Player::kI) == i_should,
                 [&] { return in.describe(); });
    const std::size_t d = std::max<std::size_t>(in.a.depth(), 1);
    const Position start = Position::start_g(in.s, in.mu);
    auto judge = [&](const Trace& t, Outcome want) {
      ++runs;
      if (t.final_depth <= depth) ++depths[t.final_depth];
      wins.check(t.outcome == want && t.final_depth <= in.a.depth(), [&] {
        return in.describe() + "; " + t.strategy_i + " vs " + t.strategy_ii + " -> " +
               outcome_name(t.outcome) + " at round " + std::to_string(t.final_depth) +
               (t.violation ? " (" + *t.violation + ")" : "");
      });
    };
    if (dec.winner == Certificate::Player::kI) {
      for (const auto& opp : adversaries_II(a, 1000 * i, adv)) {
        judge(referee(*dec.strategy_i, *opp, start, Payoff::of_set(a), d), Outcome::kIDecided);
      }
    } else {
      for (const auto& opp : adversaries_I(a, 1000 * i, adv)) {
        judge(referee(*opp, *dec.strategy_ii, start, Payoff::of_set(a), d), Outcome::kIIDecided);
      }
    }
  }
  SuiteReport r;
  r.properties = {winner.done(), wins.done()};
  r.extra["runs"] = runs;
  r.extra["final_depths"] = depths;
  return r;
}

SuiteReport oracle_suite(const SuiteOptions& o) {
  const std::size_t cases = pick(o.cases, 100), depth = pick(o.depth, 3);
  const int q = o.q ? o.q : 16;
  std::mt19937_64 rng(o.seed.value_or(2));
  Prop agree("grid minimax agrees with the measure rule");
  Prop sharp("no instance is resolution limited");
  std::size_t matrix[2][2] = {{0, 0}, {0, 0}};
  for (std::size_t i = 0; i < cases; ++i) {
    const Instance in = random_instance(rng, depth, Rational(2, q));
    const SetExpr a = SetExpr::clopen(in.a);
    const bool by_measure = decide_by_measure(in.mu, a, in.s).winner == Certificate::Player::kI;
    const GridResult g = grid_minimax(in.mu, a, in.s, q, depth);
    ++matrix[by_measure ? 0 : 1][g.i_wins ? 0 : 1];
    agree.check(g.i_wins == by_measure, [&] {
      return in.describe() + "; grid says " + (g.i_wins ? "I" : "II") + " (value " +
             g.value.str() + ")";
    });
    sharp.check(!g.resolution_limited, [&] { return in.describe(); });
  }
  SuiteReport r;
  r.properties = {agree.done(), sharp.done()};
  r.extra["matrix"] = Json{{"measure_I_grid_I", matrix[0][0]},
                           {"measure_I_grid_II", matrix[0][1]},
                           {"measure_II_grid_I", matrix[1][0]},
                           {"measure_II_grid_II", matrix[1][1]}};
  return r;
}

SuiteReport certify_suite(const SuiteOptions& o) {
  const std::size_t cases = pick(o.cases, 50), depth = pick(o.depth, 6);
  std::mt19937_64 rng(o.seed.value_or(3));
  Prop bound("level sums within s + (1 - 2^-n) eps");
  Prop replay("tree plays replay against the strategy");
  Prop exact("thresholds are exact");
  for (std::size_t i = 0; i < cases; ++i) {
    const DyadicMeasure mu = random_measure(rng);
    const Clopen u = random_clopen(rng, 4);
    const Rational mu_u = u.mass(mu);
    if (mu_u == Rational(1)) {
      --i;
      continue;
    }
    const Rational s = mu_u + (Rational(1) - mu_u) * Rational(static_cast<long>(rng() % 7), 8);
    const Rational eps(static_cast<long>(1 + rng() % 4), 8);
    auto tau = strategy_II_from_open(mu, SetExpr::clopen(u), s);
    const Position start = Position::start_g(s, mu);
    const IIWitness w = extract_tree(*tau, start, eps, depth);
    auto what = [&] {
      return "mu = " + mu.describe() + ", U = " + nodes_str(u.antichain()) + ", s = " + s.str() +
             ", eps = " + eps.str();
    };
    for (std::size_t n = 0; n <= depth; ++n) {
      const Rational sum = level_sum(w, n);
      const Rational cap = s + (Rational(1) - pow2_neg(n)) * eps;
      bound.check(sum <= cap, [&] {
        return what() + "; level " + std::to_string(n) + ": " + sum.str() + " > " + cap.str();
      });
    }
    const SetExpr payoff = SetExpr::clopen(~u);
    const auto audit = audit_ii_witness(w, *tau, start, &payoff);
    replay.check(audit.empty(), [&] { return what() + "; " + audit.front(); });
    exact.check(!w.approximate, what);
  }
  SuiteReport r;
  r.properties = {bound.done(), replay.done(), exact.done()};
  return r;
}

SuiteReport numsplit_suite(const SuiteOptions& o) {
  const std::size_t cases = pick(o.cases, 10000);
  std::mt19937_64 rng(o.seed.value_or(4));
  Prop holds("min_i a_i c_i / b_i^2 <= sum a / (sum b)^2");
  auto rnd = [&](long num, long den) {
    return Rational(static_cast<long>(rng() % (num + 1)), static_cast<long>(1 + rng() % den));
  };
  for (std::size_t i = 0; i < cases; ++i) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<Rational> a, b, c;
    Rational csum;
    for (std::size_t k = 0; k < n; ++k) {
      a.push_back(rnd(20, 9));
      b.push_back(rnd(20, 9) + Rational(1, 50));
      c.push_back(rnd(10, 1) + Rational(1, 7));
      csum += c.back();
    }
    for (Rational& x : c) x /= csum;
    const IndexBound ib = min_index_bound(a, b, c);
    holds.check(ib.value <= ib.bound, [&] {
      std::string s = "a, b, c =";
      for (std::size_t k = 0; k < n; ++k) {
        s += " (" + a[k].str() + ", " + b[k].str() + ", " + c[k].str() + ")";
      }
      return s + "; min " + ib.value.str() + " > " + ib.bound.str();
    });
  }
  SuiteReport r;
  r.properties = {holds.done()};
  return r;
}

SuiteReport bc_suite(const SuiteOptions& o) {
  const std::size_t depth = pick(o.depth, 12);
  const Rational s(49, 100), eps(1, 4);
  const DyadicMeasure fair = DyadicMeasure::fair();
  const DivergenceResult res = bc_divergence_strategy(
      EventFamily::coordinate(0), fair, [&](std::size_t) { return s; }, eps, depth);
  Prop products("block products below their tolerances");
  Prop clean("pipeline audit is clean");
  Prop root("certificate root above 1 - eps");
  Prop hits("support meets a complement event in every completed block");
  for (const std::string& f : res.audit) clean.check(false, [&] { return f; });
  clean.check(true, [] { return std::string(); });
  for (std::size_t k = 0; k < res.schedule.blocks.size(); ++k) {
    const Block& b = res.schedule.blocks[k];
    Rational prod(1);
    for (std::size_t i = b.first; i <= b.last; ++i) prod *= Rational(1) - s;
    const Rational tol = eps * pow2_neg(k + 2);
    products.check(prod == b.product && prod < tol && b.tolerance == tol, [&] {
      return "block " + std::to_string(k) + " [" + std::to_string(b.first) + ", " +
             std::to_string(b.last) + "]: product " + prod.str() + ", tolerance " + tol.str();
    });
  }
  hits.check(res.completed > 0, [] { return std::string("no completed block"); });
  if (res.witness) {
    root.check(res.witness->root() > Rational(1) - eps,
               [&] { return "root " + res.witness->root().str(); });
    for (const Node& u : res.witness->support(depth)) {
      for (std::size_t k = 0; k < res.completed; ++k) {
        const Block& b = res.schedule.blocks[k];
        hits.check(Clopen::any_coordinate(b.first, b.last + 1, 1).classify(u) == Cover::kInside,
                   [&] { return "node \"" + u.str() + "\" misses block " + std::to_string(k); });
      }
    }
  } else {
    root.check(false, [] { return std::string("no certificate"); });
  }
  SuiteReport r;
  r.properties = {products.done(), clean.done(), root.done(), hits.done()};
  r.extra["completed"] = res.completed;
  r.extra["schedule"] = to_json(res.schedule);
  return r;
}

SuiteReport rl_suite(const SuiteOptions& o) {
  const std::size_t plays = pick(o.cases, 1000), horizon = pick(o.horizon, 256);
  const std::size_t rounds = pick(o.rounds, 20);
  const std::uint64_t base = o.seed.value_or(0);
  const DyadicMeasure fair = DyadicMeasure::fair();
  const EventFamily fam = EventFamily::coordinate(1);
  Prop ratio("surrogate ratio at H = 64 within [1, 9/8]");
  Prop held("both surrogates hold every round");
  Prop hit("first three committed blocks hit");
  {
    RLConfig c64;
    c64.horizon = 64;
    const Rational got = rl_strategy(fam, fair, Rational(1), c64)->root_surrogate().ratio;
    const Rational n(64);
    const Rational want = (n / Rational(2) + (n * n - n) / Rational(4)) / (n * n / Rational(4));
    ratio.check(got == want && got >= Rational(1) && got <= Rational(9, 8),
                [&] { return "ratio " + got.str() + ", closed form " + want.str(); });
  }
  RLConfig cfg;
  cfg.horizon = horizon;
  auto rl = rl_strategy(fam, fair, Rational(1), cfg);
  Json table = Json::array();
  for (std::size_t i = 0; i < plays; ++i) {
    RandomI opp(base + i);
    Position p = Position::start_g(Rational(0), fair);
    std::string stop;
    for (std::size_t r = 0; r < rounds && stop.empty(); ++r) {
      const auto mv = opp.move(p);
      const auto reply = mv ? rl->reply(p, *mv) : std::nullopt;
      if (!reply) {
        stop = "resigned at round " + std::to_string(r);
        break;
      }
      p = p.after(*mv, *reply);
    }
    const auto st = rl->state(p);
    if (st->error) stop += (stop.empty() ? "" : ": ") + *st->error;
    bool ok = stop.empty() && st->rounds.size() == rounds;
    for (const RLRound& rd : st->rounds) {
      ok = ok && rd.after.inha < Rational(1) && rd.after.divergence.sign() > 0;
    }
    held.check(ok, [&] {
      return "seed " + std::to_string(base + i) + ": " + (stop.empty() ? "surrogate broken" : stop);
    });
    const auto hits = blocks_hit(fam, fair, *st);
    hit.check(hits.size() >= 3 && hits[0] && hits[1] && hits[2],
              [&] { return "seed " + std::to_string(base + i); });
    if (i == 0) {
      for (const RLRound& rd : st->rounds) {
        table.push_back(Json{{"round", rd.round},
                             {"chosen", rd.chosen},
                             {"played", rd.played},
                             {"cut", rd.cut},
                             {"ratio", to_json(rd.after.ratio)},
                             {"inha", to_json(rd.after.inha)},
                             {"divergence", to_json(rd.after.divergence)}});
      }
    }
  }
  SuiteReport r;
  r.properties = {ratio.done(), held.done(), hit.done()};
  r.extra["horizon"] = horizon;
  r.extra["first_play"] = table;
  return r;
}

// Depth-2 table that may have zero cells, fair below.
DyadicMeasure gappy(std::mt19937_64& rng) {
  std::vector<Rational> w(4);
  Rational sum;
  for (auto& x : w) {
    x = Rational(static_cast<long>(rng() % 3));
    sum += x;
  }
  if (sum.is_zero()) {
    w[rng() % 4] = Rational(1);
    sum = Rational(1);
  }
  for (auto& x : w) x /= sum;
  return DyadicMeasure::explicit_table(2, w, Rational(1, 2));
}

// Plays `rounds` rounds; the reason it stopped, empty when it did not.
std::string play_out(const StrategyI& one, const StrategyII& two, Position& p,
                     std::size_t rounds) {
  for (std::size_t r = 0; r < rounds; ++r) {
    const auto mv = one.move(p);
    if (!mv) return "I resigned at round " + std::to_string(r);
    if (auto v = validate_move(p, *mv)) return "I broke " + v->rule;
    const auto reply = two.reply(p, *mv);
    if (!reply) return "II resigned at round " + std::to_string(r);
    if (auto v = validate_move(p, *mv, *reply)) return "II broke " + v->rule;
    p = p.after(*mv, *reply);
  }
  return {};
}

SuiteReport fubini_suite(const SuiteOptions& o) {
  const std::size_t cases = pick(o.cases, 20), depth = pick(o.depth, 6);
  std::mt19937_64 rng(o.seed.value_or(7));
  Prop b1("null sections: sum q < eps m every round");
  Prop f1("null sections: live frontier below eps");
  Prop b2("positive sections: sum q < (1 - beta) m every round");
  Prop f2("positive sections: live frontier at most 1 - beta");
  Prop au("section audits clean");
  Prop fc("fubini_check consistent");
  auto measure = [&]() {
    switch (rng() % 3) {
      case 0:
        return DyadicMeasure::fair();
      case 1:
        return DyadicMeasure::bernoulli(Rational(static_cast<long>(1 + rng() % 9), 10));
      default:
        return gappy(rng);
    }
  };
  for (std::size_t i = 0; i < cases; ++i) {
    const ProductMeasure mu{measure(), measure()};
    const std::string tag = "instance " + std::to_string(i) + " (" + mu.first.describe() +
                            " x " + mu.second.describe() + ")";
    // Null sections from a stake-0 source.
    StrategyIIPtr tau1;
    if (i % 2 == 0) {
      tau1 = avoid_zero_pair(mu);
    } else {
      Clopen u = Clopen::empty();
      for (const Node& c : level(2)) {
        if (mu.first.mass(c).is_zero()) u = u | product_set(Clopen::cylinder(c), Clopen::full());
      }
      tau1 = strategy_II_from_open_g2(mu, u, Rational(0));
    }
    const Rational eps(static_cast<long>(1 + rng() % 3), 8);
    auto s1 = fub1_transform(tau1, mu, eps);
    Position p = Position::start_g(Rational(0), mu.first);
    RandomI opp1(100 + i);
    const std::string stop1 = play_out(opp1, *s1, p, depth);
    au.check(stop1.empty(), [&] { return tag + ": " + stop1; });
    if (stop1.empty()) {
      const SectionAudit a = audit_sections(*s1, p);
      au.check(a.failures.empty(), [&] { return tag + ": " + a.failures.front(); });
      const auto& rounds1 = s1->context(p)->rounds;
      for (std::size_t k = 0; k < rounds1.size(); ++k) {
        const auto& rd = rounds1[k];
        const Rational m = p.history()[k].offer.masses[rd.side];
        b1.check(rd.q_sum < eps * m && rd.bound == eps * m, [&] {
          return tag + ": round " + std::to_string(k) + " q_sum " + rd.q_sum.str() +
                 ", m " + m.str();
        });
      }
      f1.check(a.frontier.back() < eps,
               [&] { return tag + ": frontier " + a.frontier.back().str(); });
    }
    // Positive sections: a product set of mass at most 1 - eps2.
    const Rational eps2 = (rng() % 2) ? Rational(1, 2) : Rational(3, 8);
    const Rational gamma = eps2 / Rational(2);
    Clopen a2 = Clopen::empty();
    for (int tries = 0; tries < 20; ++tries) {
      const Clopen c = product_set(random_clopen(rng, 3), random_clopen(rng, 3));
      if (product_mass(c, mu) <= Rational(1) - eps2) {
        a2 = c;
        break;
      }
    }
    auto tau2 = strategy_II_from_open_g2(mu, a2, Rational(1) - eps2);
    auto s2 = fub2_transform(tau2, mu, eps2, gamma);
    const Rational keep = Rational(1) - fub2_beta(eps2, gamma);
    Position q = Position::start_g(Rational(1) - gamma, mu.first);
    RandomI opp2(200 + i);
    const std::string stop2 = play_out(opp2, *s2, q, depth);
    au.check(stop2.empty(), [&] { return tag + ": " + stop2; });
    if (stop2.empty()) {
      const SectionAudit a = audit_sections(*s2, q);
      au.check(a.failures.empty(), [&] { return tag + ": " + a.failures.front(); });
      const auto& rounds2 = s2->context(q)->rounds;
      for (std::size_t k = 0; k < rounds2.size(); ++k) {
        const auto& rd = rounds2[k];
        const Rational m = q.history()[k].offer.masses[rd.side];
        b2.check(rd.q_sum < keep * m && rd.bound == keep * m, [&] {
          return tag + ": round " + std::to_string(k) + " q_sum " + rd.q_sum.str() +
                 ", m " + m.str();
        });
      }
      for (std::size_t n = 1; n < a.frontier.size(); ++n) {
        f2.check(a.frontier[n] <= keep, [&] {
          return tag + ": level " + std::to_string(n) + " frontier " + a.frontier[n].str();
        });
      }
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const ProductMeasure m{gappy(rng), gappy(rng)};
    std::vector<Node> cells;
    const std::size_t count = 1 + rng() % 5;
    for (std::size_t c = 0; c < count; ++c) cells.push_back(random_node(rng, 0, 8));
    const FubiniReport fr = fubini_check(m, Clopen::from_nodes(cells), 4);
    fc.check(fr.consistent, [&] { return "A = " + nodes_str(cells); });
  }
  SuiteReport r;
  r.properties = {b1.done(), f1.done(), b2.done(), f2.done(), au.done(), fc.done()};
  return r;
}

SuiteReport unfold_suite(const SuiteOptions& o) {
  const std::size_t depth = pick(o.depth, 8), cases = pick(o.cases, 100);
  const std::size_t adv = pick(o.adversaries, 100);
  std::mt19937_64 rng(o.seed.value_or(8));
  const DyadicMeasure fair = DyadicMeasure::fair();
  Prop prune("prune keeps M'(root) > M(root) - eps");
  Prop stab("stabilize keeps more than (1 - beta) of S");
  Prop disjoint("added trees are disjoint outside S");
  Prop replays("returned positions replay");
  Prop levels("frontier mass at least s + delta/2 at every level");
  Prop coherent("canonical plays coherent");
  Prop wins("unfolded strategy defeats the adversary suite");

  for (std::size_t t = 0; t < cases; ++t) {
    std::map<Node, Rational> table{{Node(), Rational(static_cast<long>(1 + rng() % 9), 10)}};
    for (std::size_t n = 0; n < 5; ++n) {
      for (const Node& u : level(n)) {
        const Rational m = table[u];
        const Rational c0 = fair.mass(u.child(0)), c1 = fair.mass(u.child(1));
        const Rational lo = std::max(Rational(0), m - c1), hi = std::min(m, c0);
        const Rational m0 = lo + (hi - lo) * Rational(static_cast<long>(rng() % 9), 8);
        table[u.child(0)] = m0;
        table[u.child(1)] = m - m0;
      }
    }
    const ScaledMeasure m = ScaledMeasure::from_table(table, 5, fair);
    const Rational eps = m.root() * Rational(static_cast<long>(1 + rng() % 9), 10);
    const PrunedMeasure pr = prune_scaled_measure(m, fair, eps, 6);
    prune.check(pr.measure.root() > m.root() - eps && validate_scaled_measure(pr.measure, fair, 6).valid(), [&] {
      return "M(root) = " + m.root().str() + ", eps = " + eps.str() + ", M'(root) = " +
             pr.measure.root().str();
    });
  }

  const std::size_t sd = 6;
  for (std::size_t t = 0; t < 30; ++t) {
    const Rational c(static_cast<long>(5 + rng() % 7), 24);
    const Rational beta = pow2_neg(1 + rng() % 6);
    RevealSensitiveI sigma(fair, c, static_cast<int>(t % 2));
    const Position start = Position::start_unfolded(c / Rational(2), fair, 2);
    std::vector<Node> s;
    for (const Node& f : level(sd)) {
      if (rng() % 4 != 0) s.push_back(f);
    }
    const StabilizeResult st = stabilize(sigma, start, s, c / Rational(4), beta, 0, sd);
    const std::string tag = sigma.name() + ", beta = " + beta.str();
    Rational kept, all;
    for (const Node& f : s) all += fair.mass(f);
    for (const auto& [f, a] : st.reveal_at) {
      kept += fair.mass(f);
      if (a.size() == sd) continue;
      const auto p = follow(sigma, start, f, {{a, 0}});
      replays.check(p && p->y_digits() == YWord{0} && p->mass().sign() > 0,
                    [&] { return tag + ": \"" + f.str() + "\" revealed at \"" + a.str() + "\""; });
    }
    stab.check(!st.error && kept > (Rational(1) - beta) * all, [&] {
      return tag + ": " + (st.error ? *st.error : "kept " + kept.str() + " of " + all.str());
    });
    std::set<Node> seen;
    bool ok = st.disjoint;
    for (const auto& out : st.outside) {
      for (const Node& v : out) ok = ok && seen.insert(v).second;
    }
    disjoint.check(ok, [&] { return tag; });
  }

  const SetExpr a = SetExpr::clopen({Node("11")});
  auto sigma = strategy_I_from_closed(fair, SetExpr::clopen(~Clopen::cylinder(Node("11"))),
                                      Rational(1, 2), Rational(1, 6));
  const Position ustart = Position::start_unfolded(Rational(1, 2), fair, 2);
  const UnfoldResult ur = unfold_strategy_I(*sigma, ustart, 2, depth);
  levels.check(ur.audit.empty() && ur.level_mass.size() == depth + 1, [&] {
    return ur.audit.empty() ? std::string("missing levels") : ur.audit.front();
  });
  for (std::size_t n = 0; n < ur.level_mass.size(); ++n) {
    levels.check(ur.level_mass[n] >= ur.floor_mass, [&] {
      return "level " + std::to_string(n) + ": " + ur.level_mass[n].str() + " < " +
             ur.floor_mass.str();
    });
  }
  const auto ra = audit_reveals(*sigma, ustart, ur, depth);
  coherent.check(ra.empty(), [&] { return ra.front(); });
  RevealSensitiveI sensitive(fair, Rational(3, 8), 0);
  const Position sstart = Position::start_unfolded(Rational(1, 4), fair, 2);
  const UnfoldResult sr = unfold_strategy_I(sensitive, sstart, 2, sd);
  const auto sa = sr.audit.empty() ? audit_reveals(sensitive, sstart, sr, sd) : sr.audit;
  coherent.check(sa.empty(), [&] { return sensitive.name() + ": " + sa.front(); });
  if (ur.strategy) {
    const Position g = Position::start_g(Rational(1, 2), fair);
    for (const auto& opp : adversaries_II(a, 300, adv)) {
      const Trace tr = referee(*ur.strategy, *opp, g, Payoff::of_set(a), depth);
      wins.check(tr.outcome == Outcome::kIDecided,
                 [&] { return opp->name() + " -> " + outcome_name(tr.outcome); });
    }
  } else {
    wins.check(false, [] { return std::string("no strategy produced"); });
  }
  SuiteReport r;
  r.properties = {prune.done(),  stab.done(),     disjoint.done(), replays.done(),
                  levels.done(), coherent.done(), wins.done()};
  r.extra["unfold"] = Json{{"delta", to_json(ur.delta)},
                           {"floor_mass", to_json(ur.floor_mass)},
                           {"level_mass", Json::array()}};
  for (const Rational& x : ur.level_mass) r.extra["unfold"]["level_mass"].push_back(to_json(x));
  return r;
}

SuiteReport uniformize_suite(const SuiteOptions& o) {
  const std::size_t depth = pick(o.depth, 8);
  const Rational eps(1, 4);
  const DyadicMeasure fair = DyadicMeasure::fair();
  auto tau = std::make_shared<DigitsII>(
      strategy_II_from_open(fair, SetExpr::empty(), Rational(0)),
      [](const Position& pos, int side) -> std::optional<int> {
        if (pos.y_digits().empty()) return side;
        return std::nullopt;
      },
      "copy-first-bit");
  const PairTree rel = PairTree::first_digit_match(2);
  const UniformTable t = uniformize(tau, rel, fair, eps, depth);
  Prop clean("table monotone and R-compatible");
  Prop value("table maps u to its first bit");
  Prop comp("complement frontier mass at most eps");
  for (const auto& f : t.audit) clean.check(false, [&] { return f; });
  std::size_t pairs = 0;
  for (const auto& [u, y] : t.digits) {
    ++pairs;
    clean.check(rel.compatible(u, y), [&] { return "\"" + u.str() + "\" -> " + yword_str(y); });
    if (!u.empty()) {
      clean.check(is_prefix(t.digits.at(u.parent()), y),
                  [&] { return "\"" + u.str() + "\" does not extend its parent"; });
    }
    value.check(u.empty() ? y.empty() : y == YWord{u[0]},
                [&] { return "\"" + u.str() + "\" -> " + yword_str(y); });
  }
  comp.check(t.complement <= eps, [&] { return "complement " + t.complement.str(); });
  SuiteReport r;
  r.properties = {clean.done(), value.done(), comp.done()};
  r.extra["pairs"] = pairs;
  r.extra["complement"] = to_json(t.complement);
  return r;
}

}  // namespace

bool SuiteReport::pass() const {
  if (properties.empty()) return false;
  for (const auto& p : properties) {
    if (!p.pass()) return false;
  }
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"equiv", "oracle", "certify", "numsplit", "bc",
                                                 "rl",    "fubini", "unfold",  "uniformize"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  using Fn = SuiteReport (*)(const SuiteOptions&);
  static const std::map<std::string, Fn> table = {
      {"equiv", equiv_suite}, {"oracle", oracle_suite}, {"certify", certify_suite},
      {"numsplit", numsplit_suite}, {"bc", bc_suite}, {"rl", rl_suite},
      {"fubini", fubini_suite}, {"unfold", unfold_suite}, {"uniformize", uniformize_suite}};
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite \"" + name + "\"");
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport r = it->second(opts);
  r.suite = name;
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

Json to_json(const SuiteReport& r) {
  Json props = Json::array();
  for (const auto& p : r.properties) {
    Json j = Json{{"name", p.name}, {"pass", p.pass()}, {"checked", p.checked},
                  {"failures", p.failures}};
    if (p.failures) j["counterexample"] = p.counterexample;
    props.push_back(j);
  }
  return document("suite_report", Json{{"suite", r.suite},
                                       {"pass", r.pass()},
                                       {"elapsed_ms", r.elapsed_ms},
                                       {"properties", props},
                                       {"extra", r.extra}});
}

}  // namespace mgame
