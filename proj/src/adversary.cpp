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

#include "mgame/adversary.hpp"

#include <stdexcept>

namespace mgame {

std::mt19937_64 position_rng(std::uint64_t seed, const Position& pos) {
  // FNV-1a over the history key, mixed with the seed.
  std::uint64_t h = 1469598103934665603ULL ^ (seed * 0x9E3779B97F4A7C15ULL);
  for (char c : pos.key()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return std::mt19937_64(h);
}

namespace {

constexpr int kGrid = 64;

Rational grid_point(const Rational& lo, const Rational& hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(1, kGrid - 1);
  return lo + (hi - lo) * Rational(pick(rng), kGrid);
}

}  // namespace

MoveI random_legal_offer(const Position& pos, std::mt19937_64& rng) {
  const int n = pos.arity();
  std::vector<Rational> cap(n);
  Rational cap_sum;
  for (int q = 0; q < n; ++q) {
    cap[q] = pos.child_measure(q);
    cap_sum += cap[q];
  }
  Rational rem = pos.at_root() ? grid_point(pos.stake(), cap_sum, rng) : pos.mass();
  MoveI mv;
  mv.masses.resize(n);
  Rational later = cap_sum;
  for (int q = 0; q < n; ++q) {
    later -= cap[q];
    if (q == n - 1) {
      mv.masses[q] = rem;
      break;
    }
    const Rational lo = max(Rational(0), rem - later);
    const Rational hi = min(rem, cap[q]);
    const Rational m = lo < hi ? grid_point(lo, hi, rng) : lo;
    mv.masses[q] = m;
    rem -= m;
  }
  return mv;
}

std::optional<MoveI> RandomI::move(const Position& pos) const {
  auto rng = position_rng(seed_, pos);
  return random_legal_offer(pos, rng);
}

GreedyI::GreedyI(SetExpr payoff, Mode mode) : payoff_(std::move(payoff)), mode_(mode) {
  if (!payoff_.as_clopen()) throw std::invalid_argument("greedy adversary needs a clopen payoff");
  complement_ = ~*payoff_.as_clopen();
}

std::string GreedyI::name() const {
  return mode_ == Mode::kProportional ? "greedy-I/proportional" : "greedy-I/extreme";
}

std::optional<MoveI> GreedyI::move(const Position& pos) const {
  if (pos.arity() != 2) throw std::invalid_argument("greedy I plays two-cell games only");
  const DyadicMeasure& mu = pos.measure();
  const Rational cap0 = pos.child_measure(0);
  const Rational cap1 = pos.child_measure(1);
  const Rational w0 = complement_.mass_within(mu, pos.node().child(0));
  const Rational w1 = complement_.mass_within(mu, pos.node().child(1));
  Rational total;
  if (pos.at_root()) {
    total = mode_ == Mode::kProportional ? (Rational(1) + pos.stake()) / Rational(2)
                                         : pos.stake() + (Rational(1) - pos.stake()) * Rational(kGrid - 1, kGrid);
  } else {
    total = pos.mass();
  }
  // Legal values for cell 0 form the interval (lo, hi) up to forced ends.
  const Rational lo = max(Rational(0), total - cap1);
  const Rational hi = min(total, cap0);
  MoveI mv;
  mv.masses.resize(2);
  if (!(lo < hi)) {
    mv.masses[0] = lo;
  } else {
    const Rational inner_lo = lo + (hi - lo) / Rational(kGrid);
    const Rational inner_hi = hi - (hi - lo) / Rational(kGrid);
    Rational target;
    if (mode_ == Mode::kProportional) {
      const Rational wsum = w0 + w1;
      target = wsum.is_zero() ? total * cap0 / (cap0 + cap1) : total * w0 / wsum;
    } else {
      const bool left = w0 * cap1 >= w1 * cap0;
      target = left ? inner_hi : inner_lo;
    }
    mv.masses[0] = min(max(target, inner_lo), inner_hi);
  }
  mv.masses[1] = total - mv.masses[0];
  return mv;
}

std::optional<MoveII> RandomII::reply(const Position& pos, const MoveI& offer) const {
  auto rng = position_rng(seed_, pos);
  std::vector<int> live;
  for (std::size_t q = 0; q < offer.masses.size(); ++q) {
    if (offer.masses[q].sign() > 0) live.push_back(static_cast<int>(q));
  }
  if (live.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
  MoveII mv{live[pick(rng)], std::nullopt};
  if (pos.variant() == Variant::kUnfolded && (rng() & 1)) {
    std::uniform_int_distribution<int> digit(0, pos.alphabet() - 1);
    mv.y = digit(rng);
  }
  return mv;
}

GreedyII::GreedyII(SetExpr payoff, Mode mode) : payoff_(std::move(payoff)), mode_(mode) {
  if (!payoff_.as_clopen()) throw std::invalid_argument("greedy adversary needs a clopen payoff");
  set_ = *payoff_.as_clopen();
}

std::string GreedyII::name() const {
  return mode_ == Mode::kMostA ? "greedy-II/most-A" : "greedy-II/thinnest";
}

std::optional<MoveII> GreedyII::reply(const Position& pos, const MoveI& offer) const {
  if (pos.arity() != 2) throw std::invalid_argument("greedy II plays two-cell games only");
  int best = -1;
  Rational best_num, best_den;
  for (int q = 0; q < 2; ++q) {
    if (offer.masses[q].sign() <= 0) continue;
    const Rational cap = pos.child_measure(q);
    Rational num, den = cap;
    if (mode_ == Mode::kMostA) {
      num = set_.mass_within(pos.measure(), pos.node().child(q));
    } else {
      // Minimizing m/cap is maximizing -m/cap.
      num = -offer.masses[q];
    }
    // Compare num/den by cross-multiplication (den > 0 for a nonzero cell).
    if (best < 0 || num * best_den > best_num * den) {
      best = q;
      best_num = num;
      best_den = den;
    }
  }
  if (best < 0) return std::nullopt;
  return MoveII{best, std::nullopt};
}

std::vector<StrategyIPtr> adversaries_I(const SetExpr& payoff, std::uint64_t base_seed,
                                        std::size_t random_count) {
  std::vector<StrategyIPtr> out;
  for (std::size_t i = 0; i < random_count; ++i) out.push_back(std::make_shared<RandomI>(base_seed + i));
  out.push_back(std::make_shared<GreedyI>(payoff, GreedyI::Mode::kProportional));
  out.push_back(std::make_shared<GreedyI>(payoff, GreedyI::Mode::kExtreme));
  return out;
}

std::vector<StrategyIIPtr> adversaries_II(const SetExpr& payoff, std::uint64_t base_seed,
                                          std::size_t random_count) {
  std::vector<StrategyIIPtr> out;
  for (std::size_t i = 0; i < random_count; ++i) out.push_back(std::make_shared<RandomII>(base_seed + i));
  out.push_back(std::make_shared<GreedyII>(payoff, GreedyII::Mode::kMostA));
  out.push_back(std::make_shared<GreedyII>(payoff, GreedyII::Mode::kThinnest));
  return out;
}

}  // namespace mgame
