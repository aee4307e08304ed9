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

#include "mgame/fubini.hpp"

#include <stdexcept>

namespace mgame {

std::vector<Node> QuadrantContext::live() const {
  std::vector<Node> out;
  for (const auto& n : nodes) {
    if (n.live) out.push_back(n.p);
  }
  return out;
}

Rational QuadrantContext::frontier(const DyadicMeasure& second) const {
  Rational sum;
  for (const auto& n : nodes) {
    if (!n.live) sum += second.mass(n.p);
  }
  return sum;
}

SectionStrategyII::SectionStrategyII(Kind kind, StrategyIIPtr tau, ProductMeasure mu,
                                     Rational source_stake, Rational factor)
    : kind_(kind), tau_(std::move(tau)), mu_(std::move(mu)),
      source_stake_(std::move(source_stake)), factor_(std::move(factor)) {
  if (!tau_ || !tau_->has_exact_delta()) {
    throw std::invalid_argument("section transform needs a source with exact thresholds");
  }
  if (!(factor_.sign() > 0) || !(factor_ < Rational(1))) {
    throw std::invalid_argument("factor must lie in (0, 1)");
  }
}

std::string SectionStrategyII::name() const {
  return std::string(kind_ == Kind::kNull ? "null-sections(" : "positive-sections(") +
         tau_->name() + ",f=" + factor_.str() + ")";
}

std::shared_ptr<const QuadrantContext> SectionStrategyII::root() const {
  auto ctx = std::make_shared<QuadrantContext>();
  QuadrantNode n;
  n.live = true;
  n.q = source_stake_;
  n.play = Position::start_g2(source_stake_, mu_.first, mu_.second);
  ctx->nodes.push_back(std::move(n));
  return ctx;
}

std::vector<Rational> SectionStrategyII::tuple(const QuadrantContext& ctx,
                                               const QuadrantNode& node) const {
  if (node.live) {
    const Position& p = *node.play;
    return tau_->exact_delta(p, p.at_root() ? source_stake_ : p.mass());
  }
  std::vector<Rational> caps;
  for (int q = 0; q < 4; ++q) caps.push_back(mu_.mass(ctx.x.child(q >> 1), node.p.child(q & 1)));
  return caps;
}

std::shared_ptr<const QuadrantContext> SectionStrategyII::advance(const QuadrantContext& ctx,
                                                                  const MoveI& offer) const {
  auto next = std::make_shared<QuadrantContext>();
  next->rounds = ctx.rounds;
  next->flags = ctx.flags;
  if (ctx.error || offer.masses.size() != 2) {
    *next = ctx;
    if (!next->error) next->error = "offer is not a two-cell move";
    return next;
  }
  std::vector<std::vector<Rational>> tuples;
  Rational sums[2];
  for (const auto& node : ctx.nodes) {
    tuples.push_back(tuple(ctx, node));
    for (int q = 0; q < 4; ++q) sums[q >> 1] += tuples.back()[static_cast<std::size_t>(q)];
  }

  QuadrantRound rd;
  for (int i = 0; i < 2; ++i) {
    if (offer.masses[i].sign() > 0) rd.ratio[i] = sums[i] / offer.masses[i];
  }
  if (!ctx.x.empty()) {
    Rational q_sum;
    for (const auto& node : ctx.nodes) q_sum += node.q;
    rd.prior = q_sum / ctx.mass;
  }
  if (kind_ == Kind::kNull && ctx.x.empty()) {
    rd.side = offer.masses[1] > offer.masses[0] ? 1 : 0;
  } else if (!rd.ratio[0]) {
    rd.side = 1;
  } else if (!rd.ratio[1]) {
    rd.side = 0;
  } else {
    rd.side = *rd.ratio[1] < *rd.ratio[0] ? 1 : 0;
  }
  const int side = rd.side;
  const Rational m = offer.masses[side];
  next->x = ctx.x.child(side);
  next->mass = m;
  rd.bound = factor_ * m;
  if (!(sums[side] < rd.bound)) {
    next->error = "round " + std::to_string(ctx.x.size()) + ": tuple sum " + sums[side].str() +
                  " not below " + rd.bound.str();
  }

  struct Pending {
    std::size_t index;
    int quadrant;
    Rational lo;
    Rational cap;
  };
  std::vector<Pending> pending;
  for (std::size_t k = 0; k < ctx.nodes.size(); ++k) {
    const auto& node = ctx.nodes[k];
    for (int j = 0; j < 2; ++j) {
      const int quadrant = 2 * side + j;
      QuadrantNode child;
      child.p = node.p.child(j);
      const Rational cap = mu_.mass(next->x, child.p);
      const Rational& lo = tuples[k][static_cast<std::size_t>(quadrant)];
      child.q = cap;
      if (node.live && lo < cap) pending.push_back({next->nodes.size(), quadrant, lo, cap});
      next->nodes.push_back(std::move(child));
    }
  }
  if (!next->error && !pending.empty()) {
    const Rational share =
        (rd.bound - sums[side]) / Rational(static_cast<long>(pending.size()));
    for (const Pending& pd : pending) {
      QuadrantNode& child = next->nodes[pd.index];
      const QuadrantNode& parent = ctx.nodes[pd.index / 2];
      const Position& from = *parent.play;
      const Rational r = from.at_root() ? source_stake_ : from.mass();
      // The infimum itself first: it is attained when the quadrant can only
      // win with all of r.
      std::vector<Rational> tries;
      if (pd.lo.sign() > 0) tries.push_back(pd.lo);
      Rational hi = min(pd.cap, pd.lo + share);
      if (!from.at_root()) hi = min(hi, r);
      if (pd.lo < hi) tries.push_back(simplest_between(pd.lo, hi));
      std::optional<MoveI> mv;
      Rational q;
      std::string why = "no witness";
      for (const Rational& v : tries) {
        mv = tau_->witness(from, r, pd.quadrant, v);
        if (!mv) continue;
        if (auto bad = validate_move(from, *mv)) {
          why = "witness breaks " + bad->rule;
        } else if (auto rep = tau_->reply(from, *mv); !rep || rep->side != pd.quadrant) {
          why = "source does not pick the quadrant";
        } else {
          why.clear();
          q = v;
          break;
        }
      }
      if (!why.empty()) {
        next->flags.push_back("node \"" + child.p.str() + "\" at round " +
                              std::to_string(ctx.x.size()) + ": " + why);
        continue;
      }
      child.live = true;
      child.q = q;
      child.play = from.after(*mv, MoveII{pd.quadrant, std::nullopt});
    }
  }
  for (const auto& node : next->nodes) rd.q_sum += node.q;
  if (!next->error && !(rd.q_sum < rd.bound)) {
    next->error = "round " + std::to_string(ctx.x.size()) + ": q sum " + rd.q_sum.str() +
                  " not below " + rd.bound.str();
  }
  next->rounds.push_back(std::move(rd));
  return next;
}

std::shared_ptr<const QuadrantContext> SectionStrategyII::context(const Position& pos) const {
  std::shared_ptr<const QuadrantContext> ctx = root();
  for (std::size_t k = 0; k < pos.round(); ++k) {
    const std::string key = pos.prefix(k + 1).key();
    {
      std::lock_guard<std::mutex> g(lock_);
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        ctx = it->second;
        continue;
      }
    }
    auto next = advance(*ctx, pos.history()[k].offer);
    if (!next->error && next->rounds.back().side != pos.history()[k].reply.side) {
      auto bad = std::make_shared<QuadrantContext>(*next);
      bad->error = "position does not follow this strategy at round " + std::to_string(k);
      next = bad;
    }
    std::lock_guard<std::mutex> g(lock_);
    ctx = memo_.emplace(key, next).first->second;
  }
  return ctx;
}

std::optional<MoveII> SectionStrategyII::reply(const Position& pos, const MoveI& offer) const {
  const auto ctx = context(pos);
  if (ctx->error) return std::nullopt;
  auto next = advance(*ctx, offer);
  const int side = next->rounds.back().side;
  if (offer.masses.size() != 2 || offer.masses[side].sign() <= 0) return std::nullopt;
  std::lock_guard<std::mutex> g(lock_);
  memo_.emplace(pos.after(offer, MoveII{side, std::nullopt}).key(), std::move(next));
  return MoveII{side, std::nullopt};
}

std::shared_ptr<SectionStrategyII> fub1_transform(StrategyIIPtr tau, const ProductMeasure& mu,
                                                  const Rational& eps) {
  return std::make_shared<SectionStrategyII>(SectionStrategyII::Kind::kNull, std::move(tau), mu,
                                             Rational(0), eps);
}

Rational fub2_beta(const Rational& eps, const Rational& gamma) {
  if (!(gamma.sign() > 0) || !(gamma < eps) || !(eps < Rational(1))) {
    throw std::invalid_argument("need 0 < gamma < eps < 1");
  }
  return Rational(1) - (Rational(1) - eps) / (Rational(1) - gamma);
}

std::shared_ptr<SectionStrategyII> fub2_transform(StrategyIIPtr tau, const ProductMeasure& mu,
                                                  const Rational& eps, const Rational& gamma) {
  const Rational beta = fub2_beta(eps, gamma);
  return std::make_shared<SectionStrategyII>(SectionStrategyII::Kind::kPositive, std::move(tau),
                                             mu, Rational(1) - eps, Rational(1) - beta);
}

SectionAudit audit_sections(const SectionStrategyII& s, const Position& pos) {
  SectionAudit out;
  const auto& second = s.measure().second;
  const bool strict = s.kind() == SectionStrategyII::Kind::kNull;
  std::shared_ptr<const QuadrantContext> ctx;
  for (std::size_t k = 0; k <= pos.round(); ++k) {
    ctx = s.context(pos.prefix(k));
    out.live.push_back(ctx->live());
    out.frontier.push_back(ctx->frontier(second));
    if (k == 0) continue;
    const Rational& f = out.frontier.back();
    if (strict ? !(f < s.factor()) : f > s.factor()) {
      out.failures.push_back("level " + std::to_string(k) + " frontier " + f.str());
    }
  }
  if (ctx->error) out.failures.push_back(*ctx->error);
  for (const auto& f : ctx->flags) out.failures.push_back("flag: " + f);
  for (const auto& rd : ctx->rounds) {
    const std::size_t n = out.failures.size();
    if (!(rd.q_sum < rd.bound)) out.failures.push_back("q sum " + rd.q_sum.str() + " not below bound");
    const auto& mine = rd.ratio[rd.side];
    const auto& other = rd.ratio[1 - rd.side];
    if (!mine) out.failures.push_back("chosen side has mass 0");
    if (mine && rd.prior && *mine > *rd.prior) out.failures.push_back("ratio above prior average");
    if (mine && other && *mine > *other) out.failures.push_back("chosen ratio not minimal");
    if (out.failures.size() > n) out.failures.back() += " at round " + std::to_string(&rd - ctx->rounds.data());
  }
  for (const auto& node : ctx->nodes) {
    if (!node.live) continue;
    const Position& p = *node.play;
    if (p.pair().first != pos.node() || p.pair().second != node.p) {
      out.failures.push_back("live node \"" + node.p.str() + "\" off the section");
      continue;
    }
    for (std::size_t i = 0; i < p.round(); ++i) {
      const Position before = p.prefix(i);
      const Round& r = p.history()[i];
      const auto rep = s.source().reply(before, r.offer);
      if (validate_move(before, r.offer) || !rep || rep->side != r.reply.side) {
        out.failures.push_back("live node \"" + node.p.str() + "\" fails replay at round " +
                               std::to_string(i));
        break;
      }
    }
  }
  out.tree = Clopen::from_nodes(out.live.back());
  return out;
}

FubiniReport fubini_check(const ProductMeasure& mu, const Clopen& a, std::size_t d) {
  if (a.depth() > 2 * d) throw std::invalid_argument("set not decided at the given depth");
  FubiniReport r;
  r.product_mass = product_mass(a, mu);
  for (const Node& u : level(d)) {
    const Rational row = section_at(a, u).mass(mu.second);
    r.row_integral += mu.first.mass(u) * row;
    if (row.sign() > 0) {
      r.heavy_rows.push_back(u);
      r.heavy_row_mass += mu.first.mass(u);
    }
    const Rational col = column_at(a, u).mass(mu.first);
    r.column_integral += mu.second.mass(u) * col;
    if (col.sign() > 0) {
      r.heavy_columns.push_back(u);
      r.heavy_column_mass += mu.second.mass(u);
    }
  }
  r.null_product = r.product_mass.is_zero();
  r.null_rows = r.heavy_row_mass.is_zero();
  r.null_columns = r.heavy_column_mass.is_zero();
  r.consistent = r.null_product == r.null_rows && r.null_rows == r.null_columns &&
                 r.row_integral == r.product_mass && r.column_integral == r.product_mass;
  return r;
}

}  // namespace mgame
