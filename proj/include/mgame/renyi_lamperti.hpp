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

#ifndef MGAME_RENYI_LAMPERTI_HPP_
#define MGAME_RENYI_LAMPERTI_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mgame/events.hpp"
#include "mgame/strategy.hpp"

namespace mgame {

struct IndexBound {
  std::size_t index = 0;
  Rational value;  // a_i c_i / b_i^2 at `index`
  Rational bound;  // sum(a) / sum(b)^2
};

// Argmin of a_i c_i / b_i^2 (lowest index on ties). Throws
// std::invalid_argument on mismatched lengths, b_i <= 0, negative a_i or c_i,
// or weights c not summing to 1.
IndexBound min_index_bound(const std::vector<Rational>& a, const std::vector<Rational>& b,
                           const std::vector<Rational>& c);

// Largest 2^-k, k >= 1, with eta - delta > 0 and (eta - delta)^2 > delta * d.
// Throws unless eta > 0 and d >= 0.
Rational delta_for_eta(const Rational& d, const Rational& eta);

// Running pair sums of the events A_lo, ..., A_{hi-1} inside a base set S:
//   b[k] = sum_{lo <= i <= lo+k} mu(A_i ∩ S)
//   a[k] = sum_{lo <= i, j <= lo+k} mu(A_i ∩ A_j ∩ S)
struct PairSums {
  std::size_t lo = 0;
  std::vector<Rational> a;
  std::vector<Rational> b;
  Rational base_mass;  // mu(S)
};

// S = N_t ∩ committed. Uses a closed form for coordinate families under a
// product measure when `committed` depends only on coordinates below lo;
// otherwise intersects the clopen events pairwise.
PairSums pair_sums(const EventFamily& family, const DyadicMeasure& mu, const Node& t,
                   const Clopen& committed, std::size_t lo, std::size_t hi);
// Always the pairwise path; the reference for the closed form.
PairSums pair_sums_generic(const EventFamily& family, const DyadicMeasure& mu, const Node& t,
                           const Clopen& committed, std::size_t lo, std::size_t hi);

// Finite-horizon stand-ins for the two maintained quantities.
struct Surrogate {
  bool defined = false;  // some partial sum b is positive
  Rational ratio;        // min over n of a/b^2
  std::size_t at = 0;    // index n attaining it
  Rational gap;          // mu(N_t) - m_t
  Rational inha;         // ratio * gap, must stay below 1
  Rational divergence;   // b at the horizon / mu(N_t), must stay above floor
};

Surrogate evaluate_surrogate(const PairSums& sums, const Rational& cell_mass, const Rational& mass);

// Where II stands after some rounds: node t, I's mass there, cut points
// c_0 = 0 < c_1 < ... < c_r and committed = ⋂_{k<r} A_[c_k, c_{k+1}).
struct RLContext {
  Node node;
  Rational mass;
  std::vector<std::size_t> cuts{0};
  Clopen committed = Clopen::full();
};

struct RLConfig {
  std::size_t horizon = 64;
  Rational floor{0};
};

struct SideChoice {
  bool ok = false;
  int majority = 0;
  // The majority side, or the other one if the majority misses a surrogate.
  int side = 0;
  std::size_t votes[2] = {0, 0};
  std::size_t candidates = 0;
  Surrogate parent;
  std::optional<Surrogate> child[2];
  std::string error;
};

// Picks the side that keeps both surrogates: majority vote of the numsplit
// argmin over the running-minimum indices of the parent ratio where the
// hypothesis holds (ties to side 0); falls back to the other side if the
// majority side misses a surrogate.
SideChoice choose_side(const EventFamily& family, const DyadicMeasure& mu, const RLContext& ctx,
                       const Rational& m0, const Rational& m1, const RLConfig& cfg);

struct Cutoff {
  bool ok = false;
  std::size_t cut = 0;
  Surrogate after;
  std::string error;
};

// Least l > c_r such that adding A_[c_r, l) to the commitments at the context
// keeps inha < 1 and divergence > floor. On failure reports the l with the
// smallest inha.
Cutoff commitment_cutoff(const EventFamily& family, const DyadicMeasure& mu, const RLContext& ctx,
                         const RLConfig& cfg);

struct RLRound {
  std::size_t round = 0;
  int chosen = 0;
  int played = 0;
  bool forced = false;
  Rational chosen_mass;
  std::size_t cut = 0;
  Surrogate before;
  Surrogate after;
};

struct RLState {
  RLContext ctx;
  std::vector<RLRound> rounds;
  std::optional<std::string> error;
};

// II's strategy for the lim sup game: each round choose_side, then
// commitment_cutoff on the played child. Resigns (and keeps the state dump)
// if a surrogate cannot be maintained.
class RLStrategyII : public StrategyII {
 public:
  RLStrategyII(EventFamily family, DyadicMeasure mu, Rational d, RLConfig cfg);
  std::optional<MoveII> reply(const Position& pos, const MoveI& offer) const override;
  std::string name() const override;

  // State reached after the given position's history.
  std::shared_ptr<const RLState> state(const Position& pos) const;
  // Surrogate of the whole family before any move (ratio at the horizon).
  const Surrogate& root_surrogate() const { return root_; }
  // 1 - 1/ratio: the stake above which the root hypothesis holds.
  Rational surrogate_stake() const;
  const Rational& d() const { return d_; }
  const EventFamily& family() const { return family_; }

 private:
  std::shared_ptr<const RLState> advance(const RLState& from, const MoveI& offer) const;

  EventFamily family_;
  DyadicMeasure mu_;
  Rational d_;
  RLConfig cfg_;
  Surrogate root_;
  mutable std::mutex mu_lock_;
  mutable std::map<std::string, std::shared_ptr<const RLState>> memo_;
};

std::shared_ptr<RLStrategyII> rl_strategy(const EventFamily& family, const DyadicMeasure& mu,
                                          const Rational& d, const RLConfig& cfg = {});

// Per-block hit check on a finished position: block k is hit when
// mu(N_t ∩ A_[c_k, c_{k+1})) > 0.
std::vector<bool> blocks_hit(const EventFamily& family, const DyadicMeasure& mu,
                             const RLState& state);

}  // namespace mgame

#endif  // MGAME_RENYI_LAMPERTI_HPP_
