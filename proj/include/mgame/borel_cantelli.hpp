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

#ifndef MGAME_BOREL_CANTELLI_HPP_
#define MGAME_BOREL_CANTELLI_HPP_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mgame/certificate.hpp"
#include "mgame/events.hpp"
#include "mgame/transforms.hpp"

namespace mgame {

struct IndependenceCheck {
  bool ok = true;
  // First failing subset in order of size, then lexicographically.
  std::vector<std::size_t> subset;
  Rational joint;    // mu of the intersection
  Rational product;  // product of the single masses
};

// Checks mu(⋂_{i in G} A_i) = prod mu(A_i) for every G ⊆ indices with |G| >= 2.
IndependenceCheck check_mutual_independence(const EventFamily& family, const DyadicMeasure& mu,
                                            const std::vector<std::size_t>& indices);

// Upper bound on sum_{i >= n} s_i, or nullopt when none is known.
using TailBound = std::function<std::optional<Rational>(std::size_t n)>;

// II in G(0, ⋃_m ⋂_{i>=m} A_i), built from II strategies winning G(s_i, A_i).
// On the first offer of total e0 it takes the least n with tail(n) < e0 and
// plays the open-cover strategy of the intersection of the sources i >= n at
// budget (tail(n) + e0) / 2.
class ConvergenceII : public StrategyII {
 public:
  ConvergenceII(std::vector<StakedStrategy> sources, TailBound tail, DyadicMeasure mu,
                std::size_t d);
  std::optional<MoveII> reply(const Position& pos, const MoveI& offer) const override;
  std::string name() const override { return "bc-convergence"; }

  struct Plan {
    std::size_t first = 0;  // n
    Rational tail;
    Rational budget;
    std::shared_ptr<const CoverStrategyII> cover;
    std::optional<std::string> error;
  };
  // The plan used after a first offer of total e0.
  std::shared_ptr<const Plan> plan(const Rational& e0) const;

 private:
  std::vector<StakedStrategy> sources_;
  TailBound tail_;
  DyadicMeasure mu_;
  std::size_t d_;
  mutable std::mutex mu_lock_;
  mutable std::map<Rational, std::shared_ptr<const Plan>> plans_;
};

std::shared_ptr<ConvergenceII> bc_convergence_strategy(std::vector<StakedStrategy> sources,
                                                       TailBound tail, const DyadicMeasure& mu,
                                                       std::size_t d);

struct Block {
  std::size_t first = 0;  // L_k
  std::size_t last = 0;   // M_k, inclusive
  Rational tolerance;     // eps_k
  Rational product;       // prod_{L_k <= i <= M_k} (1 - s_i)
};

struct BlockSchedule {
  std::vector<Block> blocks;
  // The horizon ran out before all requested blocks closed.
  bool partial = false;
};

using Sequence = std::function<Rational(std::size_t)>;

// eps_k = eps / 2^{k+2}.
Sequence default_tolerances(const Rational& eps);

// Consecutive blocks [L_k, M_k] with M_k least such that the product of
// (1 - s_i) over the block is strictly below eps_k; L_{k+1} = M_k + 1. Stops
// after `count` blocks or when M would reach `horizon`.
BlockSchedule bc_divergence_blocks(const Sequence& s, const Sequence& tolerance,
                                   std::size_t count, std::size_t horizon);

struct DivergenceResult {
  std::vector<std::string> audit;
  BlockSchedule schedule;
  // Blocks lying entirely below the working depth.
  std::size_t completed = 0;
  Rational inner_budget;  // eps'
  std::shared_ptr<const ClosedStrategyI> strategy;
  std::optional<IWitness> witness;
};

// I strategy at stake 1 - eps whose witness measure is carried by runs that
// meet the complement of A_i somewhere in every completed block. Per block,
// II avoids ⋂_{block} A_i at stake prod (1 - s_i); these are intersected at
// budget eps' = (eps + sum of stakes) / 2 and swapped to I with slack eps - eps'.
DivergenceResult bc_divergence_strategy(const EventFamily& family, const DyadicMeasure& mu,
                                        const Sequence& s, const Rational& eps, std::size_t d,
                                        std::size_t max_blocks = 64);

}  // namespace mgame

#endif  // MGAME_BOREL_CANTELLI_HPP_
