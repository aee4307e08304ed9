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

#include "mgame/unfolding.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "mgame/scaled_measure.hpp"

namespace mgame {

DigitsII::DigitsII(StrategyIIPtr x_rule, DigitRule digits, std::string label)
    : x_rule_(std::move(x_rule)), digits_(std::move(digits)), label_(std::move(label)) {}

std::optional<MoveII> DigitsII::reply(const Position& pos, const MoveI& offer) const {
  auto r = x_rule_->reply(pos, offer);
  if (!r) return r;
  r->y = pos.variant() == Variant::kUnfolded ? digits_(pos, r->side) : std::nullopt;
  return r;
}

ProjectedII::ProjectedII(StrategyIIPtr tau, int alphabet)
    : tau_(std::move(tau)), alphabet_(alphabet) {
  if (alphabet_ < 1) throw std::invalid_argument("alphabet must be positive");
}

std::optional<Position> ProjectedII::unfolded(const Position& pos) const {
  const std::string key = pos.key();
  {
    std::lock_guard lock(memo_mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  std::optional<Position> out;
  if (pos.at_root()) {
    out = Position::start_unfolded(pos.stake(), pos.measure(), alphabet_);
  } else {
    auto before = unfolded(pos.prefix(pos.round() - 1));
    if (before) {
      const Round& last = pos.history().back();
      auto r = tau_->reply(*before, last.offer);
      if (r) {
        std::optional<int> y = r->side == last.reply.side ? r->y : std::nullopt;
        out = before->after(last.offer, MoveII{last.reply.side, y});
      }
    }
  }
  std::lock_guard lock(memo_mu_);
  memo_.emplace(key, out);
  return out;
}

std::optional<MoveII> ProjectedII::reply(const Position& pos, const MoveI& offer) const {
  auto u = unfolded(pos);
  if (!u) return std::nullopt;
  auto r = tau_->reply(*u, offer);
  if (r) r->y.reset();
  return r;
}

std::vector<Rational> ProjectedII::exact_delta(const Position& pos, const Rational& r) const {
  auto u = unfolded(pos);
  if (!u) throw std::logic_error("projected strategy resigned before this position");
  return tau_->exact_delta(*u, r);
}

std::optional<MoveI> ProjectedII::witness(const Position& pos, const Rational& r, int side,
                                          const Rational& v) const {
  auto u = unfolded(pos);
  if (!u) return std::nullopt;
  return tau_->witness(*u, r, side, v);
}

std::shared_ptr<ProjectedII> project_strategy_II(StrategyIIPtr tau, int alphabet) {
  return std::make_shared<ProjectedII>(std::move(tau), alphabet);
}

UniformTable uniformize(StrategyIIPtr tau, const PairTree& r, const DyadicMeasure& mu,
                        const Rational& eps, std::size_t d) {
  auto proj = project_strategy_II(std::move(tau), r.alphabet());
  const Position start = Position::start_g(Rational(0), mu);
  UniformTable out;
  out.tree = extract_tree(*proj, start, eps, d);
  out.audit = audit_ii_witness(out.tree, *proj, start, nullptr);
  out.complement = complement_frontier(out.tree, d, mu);
  for (std::size_t n = 0; n <= d; ++n) {
    for (const Node& u : out.tree.tree_level(n, mu)) {
      Position p = start;
      for (const Round& rd : out.tree.plays.at(u)) p = p.after(rd.offer, rd.reply);
      auto un = proj->unfolded(p);
      if (!un) {
        out.audit.push_back("projection resigned on the play reaching \"" + u.str() + "\"");
        continue;
      }
      out.digits[u] = un->y_digits();
      if (!r.compatible(u, un->y_digits())) {
        out.audit.push_back("pair (\"" + u.str() + "\", " + yword_str(un->y_digits()) +
                            ") is incompatible with R");
      }
      if (n > 0) {
        auto parent = out.digits.find(u.parent());
        if (parent != out.digits.end() && !is_prefix(parent->second, un->y_digits())) {
          out.audit.push_back("digits at \"" + u.str() + "\" do not extend those of its parent");
        }
      }
    }
  }
  return out;
}

std::optional<Position> follow(const StrategyI& sigma, const Position& from, const Node& target,
                               const RevealSchedule& schedule) {
  if (!from.node().is_prefix_of(target)) return std::nullopt;
  Position p = from;
  while (p.node().size() < target.size()) {
    auto mv = sigma.move(p);
    if (!mv || validate_move(p, *mv)) return std::nullopt;
    const int side = target[p.node().size()];
    if (mv->masses[side].sign() <= 0) return std::nullopt;
    std::optional<int> y;
    for (const auto& [node, digit] : schedule) {
      if (node == p.node()) y = digit;
    }
    p = p.after(*mv, MoveII{side, y});
  }
  return p;
}

std::map<Node, Rational> reveal_measure(const StrategyI& sigma, const Position& from,
                                        std::optional<int> digit, std::size_t d) {
  std::map<Node, Rational> values;
  if (!from.at_root()) values[from.node()] = from.mass();
  std::deque<Position> queue{from};
  while (!queue.empty()) {
    Position p = std::move(queue.front());
    queue.pop_front();
    if (p.node().size() >= d) continue;
    auto mv = sigma.move(p);
    if (!mv) throw std::runtime_error("resigned at node \"" + p.node().str() + "\"");
    if (auto v = validate_move(p, *mv)) {
      throw std::runtime_error("rule " + v->rule + " at node \"" + p.node().str() +
                               "\": " + v->detail);
    }
    if (p.at_root()) values[Node()] = mv->total();
    const std::optional<int> y = p.round() == from.round() ? digit : std::nullopt;
    for (int i = 0; i < 2; ++i) {
      if (mv->masses[i].sign() <= 0) continue;
      values[p.node().child(i)] = mv->masses[i];
      queue.push_back(p.after(*mv, MoveII{i, y}));
    }
  }
  return values;
}

namespace {

Rational frontier_mass(const DyadicMeasure& mu, const std::vector<Node>& nodes) {
  Rational m;
  for (const Node& f : nodes) m += mu.mass(f);
  return m;
}

Rational value_at(const std::map<Node, Rational>& m, const Node& v) {
  auto it = m.find(v);
  return it == m.end() ? Rational(0) : it->second;
}

}  // namespace

StabilizeResult stabilize(const StrategyI& sigma, const Position& from,
                          const std::vector<Node>& s, const Rational& eps, const Rational& beta,
                          int digit, std::size_t d) {
  StabilizeResult res;
  const DyadicMeasure& mu = from.measure();
  const Node& t = from.node();
  const std::set<Node> s_set(s.begin(), s.end());
  try {
    const auto base = reveal_measure(sigma, from, std::nullopt, d);
    for (const Node& f : s_set) {
      if (f.size() != d || !t.is_prefix_of(f)) {
        res.error = "S node \"" + f.str() + "\" is not at depth d below \"" + t.str() + "\"";
        return res;
      }
      for (std::size_t n = t.size(); n <= d; ++n) {
        const Node v = f.prefix(n);
        if (value_at(base, v) <= eps * mu.mass(v)) {
          res.error = "floor fails at \"" + v.str() + "\"";
          return res;
        }
      }
    }
    res.s_mass = frontier_mass(mu, s);
    if (s_set.empty()) return res;

    std::set<Node> in_union;
    std::map<Node, int> outside_seen;
    Rational covered;
    auto absorb = [&](const Node& a, const std::map<Node, Rational>& ma,
                      std::vector<Node>& outside) {
      for (std::size_t n = t.size(); n <= a.size(); ++n) in_union.insert(a.prefix(n));
      for (const auto& [v, m] : ma) {
        if (m.sign() <= 0 || !a.is_prefix_of(v)) continue;
        in_union.insert(v);
        if (v.size() != d) continue;
        if (s_set.count(v)) {
          if (res.reveal_at.emplace(v, a).second) covered += mu.mass(v);
        } else {
          outside.push_back(v);
          if (++outside_seen[v] > 1) res.disjoint = false;
        }
      }
    };

    std::vector<Node> outside;
    absorb(t, reveal_measure(sigma, from, digit, d), outside);
    res.outside.push_back(std::move(outside));
    res.masses.push_back(covered);
    const Rational target = (Rational(1) - beta) * res.s_mass;
    const std::size_t cap = d - t.size() + 2;
    while (covered <= target && res.reveal_at.size() < s_set.size()) {
      if (++res.iterations > cap) {
        res.error = "no progress after " + std::to_string(cap) + " iterations";
        return res;
      }
      std::set<Node> exits;
      for (const Node& f : s_set) {
        if (res.reveal_at.count(f)) continue;
        for (std::size_t n = t.size(); n <= d; ++n) {
          if (!in_union.count(f.prefix(n))) {
            exits.insert(f.prefix(n));
            break;
          }
        }
      }
      std::vector<Node> out;
      for (const Node& a : exits) {
        auto pa = follow(sigma, from, a, {});
        if (!pa) {
          res.error = "no play reaches \"" + a.str() + "\"";
          return res;
        }
        absorb(a, reveal_measure(sigma, *pa, digit, d), out);
      }
      res.outside.push_back(std::move(out));
      res.masses.push_back(covered);
    }
  } catch (const std::runtime_error& e) {
    res.error = e.what();
  }
  return res;
}

std::vector<YWord> reveal_words(int k, std::size_t max_len) {
  std::vector<YWord> out;
  std::vector<YWord> layer{YWord{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<YWord> next;
    for (const YWord& w : layer) {
      for (int i = 0; i < k; ++i) {
        YWord x = w;
        x.push_back(i);
        next.push_back(std::move(x));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

UnfoldResult unfold_strategy_I(const StrategyI& sigma, const Position& start,
                               std::size_t max_len, std::size_t d) {
  UnfoldResult r;
  if (start.variant() != Variant::kUnfolded || !start.at_root()) {
    throw std::invalid_argument("unfold_strategy_I needs the root of an unfolded game");
  }
  const DyadicMeasure& mu = start.measure();
  const Rational& s = start.stake();
  std::map<Node, Rational> m0;
  try {
    m0 = reveal_measure(sigma, start, std::nullopt, d);
  } catch (const std::runtime_error& e) {
    r.audit.push_back(std::string("sigma without digits: ") + e.what());
    return r;
  }
  r.delta = value_at(m0, Node()) - s;
  if (r.delta.sign() <= 0) {
    r.audit.push_back("first total " + value_at(m0, Node()).str() + " does not exceed the stake");
    return r;
  }
  r.eta = r.delta / Rational(4);
  r.floor_mass = s + r.delta / Rational(2);
  auto pruned = prune_scaled_measure(ScaledMeasure::from_table(m0, d, mu), mu, r.eta, d);
  std::vector<Node> frontier = pruned.measure.support_level(d);
  for (const Node& f : frontier) r.plan.schedules[f][YWord{}] = {};

  r.plan.words = reveal_words(start.alphabet(), max_len);
  Rational floor = r.eta;
  Rational beta = r.delta / Rational(8);
  for (const YWord& word : r.plan.words) {
    floor /= Rational(4);
    beta /= Rational(2);
    RevealStep step;
    step.word = word;
    step.floor = floor;
    step.beta = beta;
    step.mass_before = frontier_mass(mu, frontier);
    const YWord parent(word.begin(), word.end() - 1);
    const int digit = word.back();

    std::map<std::pair<std::string, Node>, std::vector<Node>> groups;
    std::map<std::string, RevealSchedule> by_key;
    std::vector<Node> kept;
    for (const Node& f : frontier) {
      auto& sched = r.plan.schedules[f];
      auto it = sched.find(parent);
      if (it == sched.end() || (!it->second.empty() && it->second.back().first.size() >= d)) {
        kept.push_back(f);
        ++step.pending;
        continue;
      }
      const RevealSchedule& sch = it->second;
      const Node w = sch.empty() ? start.node() : f.prefix(sch.back().first.size() + 1);
      std::string key;
      for (const auto& [node, y] : sch) key += node.str() + ":" + std::to_string(y) + ";";
      by_key[key] = sch;
      groups[{key, w}].push_back(f);
    }
    step.anchors = groups.size();

    for (const auto& [gk, members] : groups) {
      const RevealSchedule& sch = by_key.at(gk.first);
      const Node& w = gk.second;
      auto pw = follow(sigma, start, w, sch);
      if (!pw) {
        r.audit.push_back("word " + yword_str(word) + ": no play reaches anchor \"" + w.str() +
                          "\"");
        return r;
      }
      std::map<Node, Rational> mw;
      try {
        mw = reveal_measure(sigma, *pw, std::nullopt, d);
      } catch (const std::runtime_error& e) {
        r.audit.push_back("word " + yword_str(word) + ": " + e.what());
        return r;
      }
      std::vector<Node> floored;
      for (const Node& f : members) {
        bool ok = true;
        for (std::size_t n = w.size(); n <= d && ok; ++n) {
          const Node v = f.prefix(n);
          ok = value_at(mw, v) > floor * mu.mass(v);
        }
        if (ok) floored.push_back(f);
      }
      StabilizeResult st = stabilize(sigma, *pw, floored, floor, beta, digit, d);
      if (st.error) {
        r.audit.push_back("word " + yword_str(word) + " at \"" + w.str() + "\": " + *st.error);
        return r;
      }
      if (!st.disjoint) {
        r.audit.push_back("word " + yword_str(word) + " at \"" + w.str() +
                          "\": added trees overlap outside S");
      }
      for (const auto& [f, a] : st.reveal_at) {
        RevealSchedule next = sch;
        next.emplace_back(a, digit);
        r.plan.schedules[f][word] = std::move(next);
        kept.push_back(f);
        if (a.size() >= d) ++step.pending;
      }
    }
    std::sort(kept.begin(), kept.end());
    for (const Node& f : frontier) {
      if (!std::binary_search(kept.begin(), kept.end(), f)) r.plan.schedules.erase(f);
    }
    frontier = std::move(kept);
    step.mass_after = frontier_mass(mu, frontier);
    r.plan.steps.push_back(step);
    if (step.mass_after <= r.floor_mass) {
      r.audit.push_back("word " + yword_str(word) + ": frontier mass " + step.mass_after.str() +
                        " not above s + delta/2 = " + r.floor_mass.str());
      return r;
    }
  }

  r.frontier = frontier;
  for (std::size_t n = 0; n <= d; ++n) {
    std::set<Node> lv;
    for (const Node& f : frontier) lv.insert(f.prefix(n));
    r.level_mass.push_back(frontier_mass(mu, std::vector<Node>(lv.begin(), lv.end())));
  }
  const Rational total = r.level_mass.back();
  const Rational eps = (Rational(1) - s / total) / Rational(2);
  r.strategy = std::make_shared<ClosedStrategyI>(mu, Clopen::from_nodes(frontier), eps,
                                                 "unfolded(" + sigma.name() + ")");
  return r;
}

std::optional<RevealSchedule> canonical_schedule(const RevealPlan& plan, const Node& u,
                                                 const YWord& word) {
  std::optional<RevealSchedule> out;
  if (plan.schedules.empty()) return out;
  // Frontier nodes share one length, so the descendants of u are contiguous.
  const std::size_t d = plan.schedules.begin()->first.size();
  if (u.size() > d) return out;
  const Node lo = u.concat(Node::repeat(0, d - u.size()));
  for (auto it = plan.schedules.lower_bound(lo);
       it != plan.schedules.end() && u.is_prefix_of(it->first); ++it) {
    auto w = it->second.find(word);
    if (w == it->second.end()) return std::nullopt;
    if (out && *out != w->second) return std::nullopt;
    out = w->second;
  }
  if (out) {
    for (const auto& [node, y] : *out) {
      if (node.size() >= u.size()) return std::nullopt;
    }
  }
  return out;
}

std::vector<std::string> audit_reveals(const StrategyI& sigma, const Position& start,
                                       const UnfoldResult& r, std::size_t d) {
  std::vector<std::string> out;
  for (const auto& [f, by_word] : r.plan.schedules) {
    for (const auto& [word, sch] : by_word) {
      if (sch.size() != word.size()) {
        out.push_back("\"" + f.str() + "\" " + yword_str(word) + ": schedule length mismatch");
        continue;
      }
      if (!word.empty()) {
        const YWord parent(word.begin(), word.end() - 1);
        auto p = by_word.find(parent);
        if (p == by_word.end() || !std::equal(p->second.begin(), p->second.end(), sch.begin()) ||
            sch.back().second != word.back()) {
          out.push_back("\"" + f.str() + "\" " + yword_str(word) +
                        ": schedule does not extend the prefix word");
        }
      }
      if (!sch.empty() && sch.back().first.size() >= d) continue;
      auto p = follow(sigma, start, f, sch);
      if (!p) {
        out.push_back("\"" + f.str() + "\" " + yword_str(word) + ": no canonical play");
      } else if (p->y_digits() != word) {
        out.push_back("\"" + f.str() + "\" " + yword_str(word) + ": play reveals " +
                      yword_str(p->y_digits()));
      }
    }
  }
  std::vector<YWord> words{YWord{}};
  words.insert(words.end(), r.plan.words.begin(), r.plan.words.end());
  std::set<Node> tree;
  for (const Node& f : r.frontier) {
    for (std::size_t n = 0; n <= f.size(); ++n) tree.insert(f.prefix(n));
  }
  for (const YWord& word : words) {
    for (const Node& u : tree) {
      auto cu = canonical_schedule(r.plan, u, word);
      if (!cu) continue;
      auto pu = follow(sigma, start, u, *cu);
      if (!pu) {
        out.push_back("\"" + u.str() + "\" " + yword_str(word) + ": no canonical play");
        continue;
      }
      for (int b = 0; b < 2 && u.size() < d; ++b) {
        const Node v = u.child(b);
        if (!tree.count(v)) continue;
        auto cv = canonical_schedule(r.plan, v, word);
        auto pv = cv ? follow(sigma, start, v, *cv) : std::nullopt;
        if (!pv || !std::equal(pu->history().begin(), pu->history().end(),
                               pv->history().begin()) ||
            pu->y_rounds() != pv->y_rounds()) {
          out.push_back("\"" + v.str() + "\" " + yword_str(word) +
                        ": canonical play does not extend its parent's");
        }
      }
    }
  }
  for (std::size_t n = 0; n < r.level_mass.size(); ++n) {
    if (r.level_mass[n] <= r.floor_mass) {
      out.push_back("level " + std::to_string(n) + " mass " + r.level_mass[n].str() +
                    " not above " + r.floor_mass.str());
    }
  }
  return out;
}

RevealSensitiveI::RevealSensitiveI(DyadicMeasure mu, Rational c, int digit)
    : mu_(std::move(mu)), c_(std::move(c)), digit_(digit) {
  if (c_.sign() <= 0 || c_ >= Rational(1)) throw std::invalid_argument("c must lie in (0, 1)");
}

std::optional<MoveI> RevealSensitiveI::move(const Position& pos) const {
  if (pos.arity() != 2) return std::nullopt;
  const Rational m = pos.at_root() ? c_ : pos.mass();
  const Rational cell = pos.cell_measure();
  MoveI mv;
  if (!pos.at_root() && pos.history().back().reply.y == digit_ && m < pos.child_measure(1)) {
    mv.masses = {Rational(0), m};
    return mv;
  }
  if (cell.is_zero()) {
    mv.masses = {Rational(0), Rational(0)};
    return mv;
  }
  mv.masses = {m * pos.child_measure(0) / cell, m * pos.child_measure(1) / cell};
  return mv;
}

std::string RevealSensitiveI::name() const {
  return "reveal_sensitive(" + c_.str() + ", " + std::to_string(digit_) + ")";
}

}  // namespace mgame
