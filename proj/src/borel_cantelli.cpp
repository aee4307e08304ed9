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

#include "mgame/borel_cantelli.hpp"

#include <stdexcept>

namespace mgame {

namespace {

void subsets_of_size(const std::vector<std::size_t>& pool, std::size_t k, std::size_t from,
                     std::vector<std::size_t>& cur,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit, bool& stop) {
  if (stop) return;
  if (cur.size() == k) {
    stop = !visit(cur);
    return;
  }
  for (std::size_t i = from; i < pool.size() && !stop; ++i) {
    cur.push_back(pool[i]);
    subsets_of_size(pool, k, i + 1, cur, visit, stop);
    cur.pop_back();
  }
}

}  // namespace

IndependenceCheck check_mutual_independence(const EventFamily& family, const DyadicMeasure& mu,
                                            const std::vector<std::size_t>& indices) {
  std::vector<Clopen> events;
  std::vector<Rational> single;
  std::map<std::size_t, std::size_t> slot;
  for (std::size_t i : indices) {
    if (slot.count(i)) continue;
    slot[i] = events.size();
    events.push_back(family.event(i));
    single.push_back(events.back().mass(mu));
  }
  std::vector<std::size_t> pool;
  for (const auto& [i, _] : slot) pool.push_back(i);

  IndependenceCheck out;
  std::vector<std::size_t> cur;
  bool stop = false;
  auto visit = [&](const std::vector<std::size_t>& g) {
    Clopen joint = Clopen::full();
    Rational product(1);
    for (std::size_t i : g) {
      joint = joint & events[slot[i]];
      product *= single[slot[i]];
    }
    out.subset = g;
    out.joint = joint.mass(mu);
    out.product = product;
    out.ok = out.joint == product;
    return out.ok;
  };
  for (std::size_t k = 2; k <= pool.size() && !stop; ++k) subsets_of_size(pool, k, 0, cur, visit, stop);
  if (out.ok && pool.size() < 2) {
    out.subset = pool;
    out.joint = pool.empty() ? Rational(1) : single[0];
    out.product = out.joint;
  }
  return out;
}

ConvergenceII::ConvergenceII(std::vector<StakedStrategy> sources, TailBound tail,
                             DyadicMeasure mu, std::size_t d)
    : sources_(std::move(sources)), tail_(std::move(tail)), mu_(std::move(mu)), d_(d) {}

std::shared_ptr<const ConvergenceII::Plan> ConvergenceII::plan(const Rational& e0) const {
  {
    std::lock_guard<std::mutex> lock(mu_lock_);
    auto it = plans_.find(e0);
    if (it != plans_.end()) return it->second;
  }
  auto p = std::make_shared<Plan>();
  if (!(e0.sign() > 0)) {
    p->error = "first offer has total 0";
  } else {
    bool found = false;
    for (std::size_t n = 0; n <= sources_.size(); ++n) {
      const auto t = tail_(n);
      if (!t) {
        p->error = "tail bound unavailable at " + std::to_string(n);
        break;
      }
      if (*t < e0) {
        p->first = n;
        p->tail = *t;
        found = true;
        break;
      }
    }
    if (found) {
      p->budget = (p->tail + e0) / Rational(2);
      std::vector<StakedStrategy> rest(sources_.begin() + static_cast<std::ptrdiff_t>(p->first),
                                       sources_.end());
      Rational sum;
      for (const auto& src : rest) sum += src.stake;
      if (sum > p->tail) {
        p->error = "stakes past " + std::to_string(p->first) + " exceed the tail bound";
      } else {
        IntersectResult ir = intersect_strategies(rest, mu_, p->budget, d_);
        if (ir.audit.empty()) {
          p->cover = ir.strategy;
        } else {
          p->error = ir.audit.front();
        }
      }
    } else if (!p->error) {
      p->error = "no tail below " + e0.str();
    }
  }
  std::lock_guard<std::mutex> lock(mu_lock_);
  return plans_.emplace(e0, std::move(p)).first->second;
}

std::optional<MoveII> ConvergenceII::reply(const Position& pos, const MoveI& offer) const {
  const Rational e0 = pos.at_root() ? offer.total() : pos.history().front().offer.total();
  const auto p = plan(e0);
  if (p->error) return std::nullopt;
  return p->cover->reply(pos, offer);
}

std::shared_ptr<ConvergenceII> bc_convergence_strategy(std::vector<StakedStrategy> sources,
                                                       TailBound tail, const DyadicMeasure& mu,
                                                       std::size_t d) {
  return std::make_shared<ConvergenceII>(std::move(sources), std::move(tail), mu, d);
}

Sequence default_tolerances(const Rational& eps) {
  return [eps](std::size_t k) { return eps * pow2_neg(static_cast<unsigned>(k + 2)); };
}

BlockSchedule bc_divergence_blocks(const Sequence& s, const Sequence& tolerance,
                                   std::size_t count, std::size_t horizon) {
  BlockSchedule out;
  std::size_t lo = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const Rational tol = tolerance(k);
    if (!(tol.sign() > 0)) throw std::invalid_argument("tolerances must be positive");
    Rational prod(1);
    std::size_t m = lo;
    bool closed = false;
    for (; m < horizon; ++m) {
      const Rational si = s(m);
      if (si.sign() < 0 || si > Rational(1)) throw std::invalid_argument("s_i outside [0, 1]");
      prod *= Rational(1) - si;
      if (prod < tol) {
        closed = true;
        break;
      }
    }
    if (!closed) {
      out.partial = true;
      break;
    }
    out.blocks.push_back({lo, m, tol, prod});
    lo = m + 1;
  }
  return out;
}

DivergenceResult bc_divergence_strategy(const EventFamily& family, const DyadicMeasure& mu,
                                        const Sequence& s, const Rational& eps, std::size_t d,
                                        std::size_t max_blocks) {
  DivergenceResult out;
  if (!(eps.sign() > 0) || !(eps < Rational(1))) {
    out.audit.push_back("need 0 < eps < 1");
    return out;
  }
  out.schedule = bc_divergence_blocks(s, default_tolerances(eps), max_blocks, 4 * d + 64);
  std::vector<StakedStrategy> sources;
  Clopen target = Clopen::full();
  Rational stakes;
  for (const Block& b : out.schedule.blocks) {
    if (b.last >= d) break;
    Clopen inside = Clopen::full();
    for (std::size_t i = b.first; i <= b.last; ++i) inside = inside & family.event(i);
    target = target & ~inside;
    try {
      sources.push_back({b.product, strategy_II_from_open(mu, SetExpr::clopen(inside), b.product),
                         SetExpr::clopen(~inside)});
    } catch (const std::invalid_argument& e) {
      out.audit.push_back("block " + std::to_string(out.completed) + ": " + e.what());
      return out;
    }
    stakes += b.product;
    ++out.completed;
  }
  out.inner_budget = (eps + stakes) / Rational(2);
  const IntersectResult ir = intersect_strategies(sources, mu, out.inner_budget, d);
  if (!ir.audit.empty()) {
    out.audit = ir.audit;
    return out;
  }
  const SwapResult sw = swap_II_to_I(*ir.strategy, mu, SetExpr::clopen(~ir.cover), eps,
                                     eps - out.inner_budget, d);
  if (!sw.audit.empty()) {
    out.audit = sw.audit;
    return out;
  }
  out.strategy = sw.strategy_i;
  const Rational stake = Rational(1) - eps;
  IWitness w = extract_scaled_measure(*sw.strategy_i, Position::start_g(stake, mu), d);
  const SetExpr avoid = SetExpr::clopen(~target);
  for (const auto& f : audit_i_witness(w, mu, &avoid)) out.audit.push_back("witness: " + f);
  if (!(w.root() > stake)) {
    out.audit.push_back("witness root " + w.root().str() + " not above " + stake.str());
  }
  for (const Node& u : w.support(d)) {
    if (target.classify(u) != Cover::kInside) {
      out.audit.push_back("support node " + u.str() + " misses a block");
      break;
    }
  }
  out.witness = std::move(w);
  return out;
}

}  // namespace mgame
