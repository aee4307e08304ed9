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

#include "mgame/certificate.hpp"

#include <algorithm>
#include <deque>

#include "mgame/delta.hpp"

namespace mgame {

Rational IWitness::at(const Node& t) const {
  auto it = values.find(t);
  return it == values.end() ? Rational(0) : it->second;
}

std::vector<Node> IWitness::support(std::size_t level) const {
  std::vector<Node> out;
  for (const auto& [t, m] : values) {
    if (t.size() == level && m.sign() > 0) out.push_back(t);
  }
  return out;
}

bool IIWitness::in_tree(const Node& u, const DyadicMeasure& mu) const {
  auto it = values.find(u);
  return it != values.end() && it->second < mu.mass(u);
}

std::vector<Node> IIWitness::tree_level(std::size_t level, const DyadicMeasure& mu) const {
  std::vector<Node> out;
  for (const auto& [u, m] : values) {
    if (u.size() == level && m < mu.mass(u)) out.push_back(u);
  }
  return out;
}

Clopen IIWitness::tree_clopen(std::size_t level, const DyadicMeasure& mu) const {
  return Clopen::from_nodes(tree_level(level, mu));
}

IWitness extract_scaled_measure(const StrategyI& sigma, const Position& start, std::size_t d) {
  IWitness w;
  w.stake = start.stake();
  w.depth = start.round() + d;
  if (!start.at_root()) w.values[start.node()] = start.mass();
  std::deque<Position> queue{start};
  while (!queue.empty()) {
    Position p = std::move(queue.front());
    queue.pop_front();
    if (p.round() >= w.depth) continue;
    auto mv = sigma.move(p);
    if (!mv) {
      w.aborted = "resigned at node \"" + p.node().str() + "\"";
      return w;
    }
    if (auto v = validate_move(p, *mv)) {
      w.aborted = "rule " + v->rule + " at node \"" + p.node().str() + "\": " + v->detail;
      return w;
    }
    if (p.at_root()) w.values[Node()] = mv->total();
    for (int i = 0; i < 2; ++i) {
      if (mv->masses[i].sign() <= 0) continue;
      w.values[p.node().child(i)] = mv->masses[i];
      queue.push_back(p.after(*mv, MoveII{i, std::nullopt}));
    }
  }
  return w;
}

IIWitness extract_tree(const StrategyII& tau, const Position& start, const Rational& eps,
                       std::size_t d, int q) {
  const DyadicMeasure& mu = start.measure();
  IIWitness w;
  w.stake = start.stake();
  w.eps = eps;
  w.depth = d;
  w.values[Node()] = start.stake();
  w.plays[Node()] = {};
  std::vector<Node> level{Node()};
  Rational budget = eps;
  for (std::size_t n = 0; n < d; ++n) {
    budget /= Rational(4);
    std::vector<Node> next;
    for (const Node& u : level) {
      const Rational mu_u = mu.mass(u);
      const Rational m_u = w.values.at(u);
      for (int i = 0; i < 2; ++i) next.push_back(u.child(i));
      if (!(m_u < mu_u)) {
        for (int i = 0; i < 2; ++i) w.values[u.child(i)] = mu.mass(u.child(i));
        continue;
      }
      Position p = start;
      for (const Round& r : w.plays.at(u)) p = p.after(r.offer, r.reply);
      const DeltaEstimate est = estimate_delta(tau, p, m_u, q);
      for (int i = 0; i < 2; ++i) {
        const Node child = u.child(i);
        const Rational cap = mu.mass(child);
        const Rational& delta = est.delta[i];
        if (delta >= cap) {
          w.values[child] = cap;
          continue;
        }
        std::optional<MoveI> mv;
        Rational v;
        if (est.exact) {
          // The infimum itself is tried first; it is often attained inside the cell.
          v = delta;
          mv = tau.witness(p, m_u, i, v);
          if (!mv || validate_move(p, *mv)) {
            Rational hi = min(delta + budget, cap);
            if (!p.at_root()) hi = min(hi, m_u);
            if (delta < hi) {
              v = simplest_between(delta, hi);
              mv = tau.witness(p, m_u, i, v);
            }
          }
        } else if (est.witness[i]) {
          mv = est.witness[i];
          v = mv->masses[i];
          w.approximate = true;
          if (v - delta > budget) w.slack += v - delta - budget;
        }
        std::optional<MoveII> reply;
        if (mv && !validate_move(p, *mv)) reply = tau.reply(p, *mv);
        if (!mv || !reply || reply->side != i || validate_move(p, *mv, *reply)) {
          // No usable witness: the child leaves the tree at full mass.
          w.approximate = true;
          w.slack += cap - delta;
          w.values[child] = cap;
          continue;
        }
        w.values[child] = v;
        auto play = w.plays.at(u);
        play.push_back({*mv, *reply});
        w.plays[child] = std::move(play);
      }
    }
    level = std::move(next);
  }
  return w;
}

std::vector<std::string> audit_i_witness(const IWitness& w, const DyadicMeasure& mu,
                                         const SetExpr* payoff) {
  std::vector<std::string> fails;
  if (w.aborted) {
    fails.push_back("tabulation aborted: " + *w.aborted);
    return fails;
  }
  const Rational root = w.root();
  if (!(root > w.stake)) fails.push_back("M(root) = " + root.str() + " not above stake " + w.stake.str());
  const ScaledMeasure m = ScaledMeasure::from_table(w.values, w.depth, mu);
  for (const auto& v : validate_scaled_measure(m, mu, w.depth).violations) {
    fails.push_back("scaled measure " + v.invariant + " at \"" + v.node.str() + "\": " + v.detail);
  }
  for (std::size_t n = 0; n <= w.depth; ++n) {
    Rational sum, cover;
    for (const Node& t : w.support(n)) {
      sum += w.at(t);
      cover += mu.mass(t);
    }
    if (sum != root) fails.push_back("level " + std::to_string(n) + " sums to " + sum.str());
    if (cover < root) fails.push_back("level " + std::to_string(n) + " support measure " + cover.str() + " below M(root)");
  }
  if (payoff) {
    const bool decided = payoff->as_clopen() && payoff->as_clopen()->depth() <= w.depth;
    for (const auto& [t, v] : w.values) {
      if (v.sign() <= 0) continue;
      const Cover c = payoff->classify(t);
      if (c == Cover::kInside) fails.push_back("support node \"" + t.str() + "\" lies inside the payoff");
      if (decided && t.size() == w.depth && c != Cover::kOutside) {
        fails.push_back("support node \"" + t.str() + "\" not separated from the payoff");
      }
    }
  }
  return fails;
}

Rational level_sum(const IIWitness& w, std::size_t level) {
  Rational sum;
  for (const auto& [u, m] : w.values) {
    if (u.size() == level) sum += m;
  }
  return sum;
}

Rational complement_frontier(const IIWitness& w, std::size_t level, const DyadicMeasure& mu) {
  Rational sum;
  for (const auto& [u, m] : w.values) {
    if (u.size() == level && !(m < mu.mass(u))) sum += mu.mass(u);
  }
  return sum;
}

std::vector<std::string> audit_ii_witness(const IIWitness& w, const StrategyII& tau,
                                          const Position& start, const SetExpr* payoff) {
  std::vector<std::string> fails;
  const DyadicMeasure& mu = start.measure();
  const Rational extra = w.approximate ? w.slack : Rational(0);
  for (std::size_t n = 0; n <= w.depth; ++n) {
    std::size_t count = 0;
    for (const auto& [u, m] : w.values) count += u.size() == n;
    if (count != (std::size_t{1} << n)) {
      fails.push_back("level " + std::to_string(n) + " incomplete");
      continue;
    }
    const Rational pow = Rational(1) - pow2_neg(static_cast<unsigned>(n));
    const Rational bound = w.stake + pow * w.eps + extra;
    const Rational sum = level_sum(w, n);
    if (sum > bound) fails.push_back("level " + std::to_string(n) + " sum " + sum.str() + " exceeds " + bound.str());
    const Rational comp = complement_frontier(w, n, mu);
    if (comp > w.stake + w.eps + extra) {
      fails.push_back("level " + std::to_string(n) + " complement mass " + comp.str() + " exceeds s + eps");
    }
  }
  for (const auto& [u, m] : w.values) {
    if (!(m < mu.mass(u))) continue;
    if (payoff && payoff->classify(u) == Cover::kOutside) {
      fails.push_back("tree node \"" + u.str() + "\" leaves the payoff");
    }
    auto it = w.plays.find(u);
    if (it == w.plays.end()) {
      fails.push_back("tree node \"" + u.str() + "\" has no play");
      continue;
    }
    const auto& play = it->second;
    if (play.size() != u.size()) {
      fails.push_back("play for \"" + u.str() + "\" has wrong length");
      continue;
    }
    if (!u.empty()) {
      auto parent = w.plays.find(u.parent());
      if (parent == w.plays.end() ||
          !std::equal(parent->second.begin(), parent->second.end(), play.begin())) {
        fails.push_back("play for \"" + u.str() + "\" does not extend its parent's");
      }
    }
    Position p = start;
    for (std::size_t k = 0; k < play.size(); ++k) {
      const Round& r = play[k];
      if (auto v = validate_move(p, r.offer)) {
        fails.push_back("play for \"" + u.str() + "\": I " + v->rule);
        break;
      }
      auto reply = tau.reply(p, r.offer);
      if (!reply || !(*reply == r.reply) || validate_move(p, r.offer, *reply)) {
        fails.push_back("play for \"" + u.str() + "\" does not follow the strategy");
        break;
      }
      if (r.reply.side != u[k]) {
        fails.push_back("play for \"" + u.str() + "\" follows another branch");
        break;
      }
      p = p.after(r.offer, r.reply);
    }
    if (!play.empty() && p.mass() != m) {
      fails.push_back("play for \"" + u.str() + "\" ends at mass " + p.mass().str() + " not " + m.str());
    }
  }
  return fails;
}

}  // namespace mgame
