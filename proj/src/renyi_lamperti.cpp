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

#include "mgame/renyi_lamperti.hpp"

#include <stdexcept>

namespace mgame {

IndexBound min_index_bound(const std::vector<Rational>& a, const std::vector<Rational>& b,
                           const std::vector<Rational>& c) {
  if (a.empty() || a.size() != b.size() || a.size() != c.size()) {
    throw std::invalid_argument("a, b, c must be non-empty and of equal length");
  }
  Rational csum, asum, bsum;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i].sign() <= 0) throw std::invalid_argument("b_" + std::to_string(i) + " must be positive");
    if (a[i].sign() < 0 || c[i].sign() < 0) {
      throw std::invalid_argument("a and c must be non-negative");
    }
    csum += c[i];
    asum += a[i];
    bsum += b[i];
  }
  if (csum != Rational(1)) throw std::invalid_argument("c must sum to 1, got " + csum.str());
  IndexBound out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational v = a[i] * c[i] / (b[i] * b[i]);
    if (i == 0 || v < out.value) {
      out.index = i;
      out.value = v;
    }
  }
  out.bound = asum / (bsum * bsum);
  return out;
}

Rational delta_for_eta(const Rational& d, const Rational& eta) {
  if (eta.sign() <= 0) throw std::invalid_argument("eta must be positive");
  if (d.sign() < 0) throw std::invalid_argument("D' must be non-negative");
  Rational delta(1, 2);
  for (;;) {
    const Rational gap = eta - delta;
    if (gap.sign() > 0 && gap * gap > delta * d) return delta;
    delta /= Rational(2);
  }
}

PairSums pair_sums_generic(const EventFamily& family, const DyadicMeasure& mu, const Node& t,
                           const Clopen& committed, std::size_t lo, std::size_t hi) {
  PairSums out;
  out.lo = lo;
  const Clopen base = committed & Clopen::cylinder(t);
  out.base_mass = base.mass(mu);
  std::vector<Clopen> ev;
  Rational a, b;
  for (std::size_t n = lo; n < hi; ++n) {
    ev.push_back(family.event(n) & base);
    const Rational own = ev.back().mass(mu);
    Rational cross;
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) cross += (ev[i] & ev.back()).mass(mu);
    b += own;
    a += own + Rational(2) * cross;
    out.a.push_back(a);
    out.b.push_back(b);
  }
  return out;
}

PairSums pair_sums(const EventFamily& family, const DyadicMeasure& mu, const Node& t,
                   const Clopen& committed, std::size_t lo, std::size_t hi) {
  const auto from = mu.product_from();
  if (family.kind() != EventFamily::Kind::kCoordinate || !from || *from != 0 ||
      committed.depth() > lo) {
    return pair_sums_generic(family, mu, t, committed, lo, hi);
  }
  // Events past both t and the committed coordinates are independent of
  // N_t ∩ committed; earlier ones are constant on N_t.
  const int bit = family.coordinate_bit();
  const Rational p = bit ? mu.product_p() : Rational(1) - mu.product_p();
  PairSums out;
  out.lo = lo;
  out.base_mass = committed.mass_within(mu, t);
  Rational g1, g2;
  for (std::size_t n = lo; n < hi; ++n) {
    const Rational g = n < t.size() ? Rational(t[n] == bit ? 1 : 0) : p;
    g1 += g;
    g2 += g * g;
    out.a.push_back(out.base_mass * (g1 * g1 - g2 + g1));
    out.b.push_back(out.base_mass * g1);
  }
  return out;
}

Surrogate evaluate_surrogate(const PairSums& sums, const Rational& cell_mass, const Rational& mass) {
  Surrogate s;
  s.gap = cell_mass - mass;
  for (std::size_t k = 0; k < sums.b.size(); ++k) {
    if (sums.b[k].sign() <= 0) continue;
    const Rational r = sums.a[k] / (sums.b[k] * sums.b[k]);
    if (!s.defined || r < s.ratio) {
      s.ratio = r;
      s.at = sums.lo + k;
    }
    s.defined = true;
  }
  s.inha = s.ratio * s.gap;
  if (!sums.b.empty() && cell_mass.sign() > 0) s.divergence = sums.b.back() / cell_mass;
  return s;
}

namespace {

bool holds(const Surrogate& s, const RLConfig& cfg) {
  return s.defined && s.inha < Rational(1) && s.divergence > cfg.floor;
}

std::string dump(const Surrogate& s) {
  if (!s.defined) return "undefined (no event mass)";
  return "ratio " + s.ratio.str() + " at n=" + std::to_string(s.at) + ", gap " + s.gap.str() +
         ", inha " + s.inha.str() + ", divergence " + s.divergence.str();
}

}  // namespace

SideChoice choose_side(const EventFamily& family, const DyadicMeasure& mu, const RLContext& ctx,
                       const Rational& m0, const Rational& m1, const RLConfig& cfg) {
  SideChoice out;
  const std::size_t lo = ctx.cuts.back();
  const std::size_t hi = cfg.horizon;
  if (lo >= hi) {
    out.error = "cut " + std::to_string(lo) + " reached the horizon";
    return out;
  }
  const Node& t = ctx.node;
  const PairSums parent = pair_sums(family, mu, t, ctx.committed, lo, hi);
  out.parent = evaluate_surrogate(parent, mu.mass(t), ctx.mass);
  if (!out.parent.defined || !(out.parent.inha < Rational(1))) {
    out.error = "hypothesis fails at \"" + t.str() + "\": " + dump(out.parent);
    return out;
  }
  const Rational m[2] = {m0, m1};
  PairSums kids[2];
  Rational c[2];
  for (int l = 0; l < 2; ++l) {
    kids[l] = pair_sums(family, mu, t.child(l), ctx.committed, lo, hi);
    c[l] = (mu.mass(t.child(l)) - m[l]) / out.parent.gap;
    out.child[l] = evaluate_surrogate(kids[l], mu.mass(t.child(l)), m[l]);
  }
  // Indices where the parent ratio reaches a new running minimum and the
  // hypothesis holds there.
  std::optional<Rational> best;
  for (std::size_t k = 0; k < parent.b.size(); ++k) {
    if (parent.b[k].sign() <= 0) continue;
    const Rational r = parent.a[k] / (parent.b[k] * parent.b[k]);
    if (best && r > *best) continue;
    best = r;
    if (!(r * out.parent.gap < Rational(1))) continue;
    ++out.candidates;
    int side;
    if (kids[0].b[k].sign() <= 0) {
      side = 1;
    } else if (kids[1].b[k].sign() <= 0) {
      side = 0;
    } else {
      side = static_cast<int>(min_index_bound({kids[0].a[k], kids[1].a[k]},
                                              {kids[0].b[k], kids[1].b[k]}, {c[0], c[1]})
                                  .index);
    }
    ++out.votes[side];
  }
  out.majority = out.votes[1] > out.votes[0] ? 1 : 0;
  if (holds(*out.child[out.majority], cfg)) {
    out.side = out.majority;
  } else if (holds(*out.child[1 - out.majority], cfg)) {
    out.side = 1 - out.majority;
  } else {
    out.error = "no side keeps the surrogates at \"" + t.str() + "\": side 0 " +
                dump(*out.child[0]) + "; side 1 " + dump(*out.child[1]);
    return out;
  }
  out.ok = true;
  return out;
}

Cutoff commitment_cutoff(const EventFamily& family, const DyadicMeasure& mu, const RLContext& ctx,
                         const RLConfig& cfg) {
  Cutoff out;
  const std::size_t lo = ctx.cuts.back();
  const Rational cell = mu.mass(ctx.node);
  std::optional<Cutoff> best;
  for (std::size_t l = lo + 1; l < cfg.horizon; ++l) {
    const Clopen k = ctx.committed & family.block_union(lo, l);
    const Surrogate s =
        evaluate_surrogate(pair_sums(family, mu, ctx.node, k, l, cfg.horizon), cell, ctx.mass);
    if (holds(s, cfg)) {
      out.ok = true;
      out.cut = l;
      out.after = s;
      return out;
    }
    if (s.defined && (!best || s.inha < best->after.inha)) best = Cutoff{false, l, s, ""};
  }
  if (best) out = *best;
  out.error = "no cut in (" + std::to_string(lo) + ", " + std::to_string(cfg.horizon) +
              ") keeps the surrogates at \"" + ctx.node.str() + "\"" +
              (best ? "; best l=" + std::to_string(best->cut) + ": " + dump(best->after) : "");
  return out;
}

RLStrategyII::RLStrategyII(EventFamily family, DyadicMeasure mu, Rational d, RLConfig cfg)
    : family_(std::move(family)), mu_(std::move(mu)), d_(std::move(d)), cfg_(std::move(cfg)) {
  if (cfg_.horizon == 0) throw std::invalid_argument("horizon must be positive");
  root_ = evaluate_surrogate(pair_sums(family_, mu_, Node(), Clopen::full(), 0, cfg_.horizon),
                             Rational(1), Rational(0));
}

std::string RLStrategyII::name() const {
  return "rl(D=" + d_.str() + ",H=" + std::to_string(cfg_.horizon) + ")";
}

Rational RLStrategyII::surrogate_stake() const {
  if (!root_.defined || root_.ratio.sign() <= 0) return Rational(1);
  return Rational(1) - Rational(1) / root_.ratio;
}

std::shared_ptr<const RLState> RLStrategyII::advance(const RLState& from, const MoveI& offer) const {
  auto next = std::make_shared<RLState>(from);
  if (from.error) return next;
  if (offer.masses.size() != 2) {
    next->error = "two-cell offers only";
    return next;
  }
  RLContext ctx = from.ctx;
  ctx.mass = offer.total();
  const SideChoice choice =
      choose_side(family_, mu_, ctx, offer.masses[0], offer.masses[1], cfg_);
  RLRound round;
  round.round = from.rounds.size();
  round.before = choice.parent;
  if (!choice.ok) {
    next->error = "round " + std::to_string(round.round) + ": " + choice.error;
    return next;
  }
  round.chosen = choice.side;
  round.chosen_mass = offer.masses[choice.side];
  round.played = choice.side;
  if (round.chosen_mass.is_zero()) {
    round.played = 1 - choice.side;
    round.forced = true;
  }
  RLContext child;
  child.node = ctx.node.child(round.played);
  child.mass = offer.masses[round.played];
  child.cuts = ctx.cuts;
  child.committed = ctx.committed;
  const Cutoff cut = commitment_cutoff(family_, mu_, child, cfg_);
  if (!cut.ok) {
    next->error = "round " + std::to_string(round.round) + ": " + cut.error;
    return next;
  }
  child.committed = child.committed & family_.block_union(child.cuts.back(), cut.cut);
  child.cuts.push_back(cut.cut);
  round.cut = cut.cut;
  round.after = cut.after;
  next->ctx = std::move(child);
  next->rounds.push_back(std::move(round));
  return next;
}

std::shared_ptr<const RLState> RLStrategyII::state(const Position& pos) const {
  const std::string key = pos.key();
  {
    std::lock_guard<std::mutex> lock(mu_lock_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  std::shared_ptr<const RLState> s;
  if (pos.at_root()) {
    s = std::make_shared<RLState>();
  } else {
    const auto parent = state(pos.prefix(pos.round() - 1));
    auto next = advance(*parent, pos.history().back().offer);
    if (!next->error && next->ctx.node != pos.node()) {
      auto copy = std::make_shared<RLState>(*next);
      copy->error = "history leaves the strategy at round " + std::to_string(pos.round() - 1);
      next = copy;
    }
    s = next;
  }
  std::lock_guard<std::mutex> lock(mu_lock_);
  memo_.emplace(key, s);
  return s;
}

std::optional<MoveII> RLStrategyII::reply(const Position& pos, const MoveI& offer) const {
  const auto next = advance(*state(pos), offer);
  if (next->error) return std::nullopt;
  const int side = next->rounds.back().played;
  const Position after = pos.after(offer, MoveII{side, std::nullopt});
  std::lock_guard<std::mutex> lock(mu_lock_);
  memo_.emplace(after.key(), next);
  return MoveII{side, std::nullopt};
}

std::shared_ptr<RLStrategyII> rl_strategy(const EventFamily& family, const DyadicMeasure& mu,
                                          const Rational& d, const RLConfig& cfg) {
  return std::make_shared<RLStrategyII>(family, mu, d, cfg);
}

std::vector<bool> blocks_hit(const EventFamily& family, const DyadicMeasure& mu,
                             const RLState& state) {
  std::vector<bool> out;
  const auto& cuts = state.ctx.cuts;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    out.push_back(family.block_union(cuts[k], cuts[k + 1]).mass_within(mu, state.ctx.node).sign() > 0);
  }
  return out;
}

}  // namespace mgame
