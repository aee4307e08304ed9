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

#ifndef MGAME_ADVERSARY_HPP_
#define MGAME_ADVERSARY_HPP_

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "mgame/set_expr.hpp"
#include "mgame/strategy.hpp"

namespace mgame {

// Deterministic generator for a (seed, position) pair.
std::mt19937_64 position_rng(std::uint64_t seed, const Position& pos);

// Legal offer drawn from a 1/64 grid of the legal range, cell by cell.
MoveI random_legal_offer(const Position& pos, std::mt19937_64& rng);

class RandomI : public StrategyI {
 public:
  explicit RandomI(std::uint64_t seed) : seed_(seed) {}
  std::optional<MoveI> move(const Position& pos) const override;
  std::string name() const override { return "random-I#" + std::to_string(seed_); }

 private:
  std::uint64_t seed_;
};

// Two-cell I adversary steering mass toward the complement of A.
class GreedyI : public StrategyI {
 public:
  enum class Mode {
    kProportional,  // split in proportion to mu(A^c ∩ cell)
    kExtreme        // load the cell with the larger conditional complement mass
  };
  GreedyI(SetExpr payoff, Mode mode);
  std::optional<MoveI> move(const Position& pos) const override;
  std::string name() const override;

 private:
  SetExpr payoff_;
  Clopen complement_;
  Mode mode_;
};

class RandomII : public StrategyII {
 public:
  // In the unfolded game, emits a random y-digit about half the time.
  explicit RandomII(std::uint64_t seed) : seed_(seed) {}
  std::optional<MoveII> reply(const Position& pos, const MoveI& offer) const override;
  std::string name() const override { return "random-II#" + std::to_string(seed_); }

 private:
  std::uint64_t seed_;
};

class GreedyII : public StrategyII {
 public:
  enum class Mode {
    kMostA,    // highest conditional measure of A
    kThinnest  // lowest offered mass relative to the cell measure
  };
  GreedyII(SetExpr payoff, Mode mode);
  std::optional<MoveII> reply(const Position& pos, const MoveI& offer) const override;
  std::string name() const override;

 private:
  SetExpr payoff_;
  Clopen set_;
  Mode mode_;
};

// 100 random opponents (seeds base..base+99) plus the two greedy modes.
std::vector<StrategyIPtr> adversaries_I(const SetExpr& payoff, std::uint64_t base_seed,
                                        std::size_t random_count = 100);
std::vector<StrategyIIPtr> adversaries_II(const SetExpr& payoff, std::uint64_t base_seed,
                                          std::size_t random_count = 100);

}  // namespace mgame

#endif  // MGAME_ADVERSARY_HPP_
