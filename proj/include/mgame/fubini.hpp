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

#ifndef MGAME_FUBINI_HPP_
#define MGAME_FUBINI_HPP_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "mgame/product.hpp"
#include "mgame/strategy.hpp"

namespace mgame {

// One second-coordinate node p at the current level. A live node carries the
// G2 position reached by a move of I that puts q on the quadrant
// (x_{n-1}, p_{n-1}) and that the source strategy answers with it; a dead
// node has q equal to the full product mass of its cell.
struct QuadrantNode {
  Node p;
  bool live = false;
  Rational q;
  std::optional<Position> play;
};

struct QuadrantRound {
  int side = 0;
  // Sum of the four-tuples at each side over I's mass there; unset when the
  // side got mass 0.
  std::optional<Rational> ratio[2];
  // Sum of q over the previous mass (unset at the root).
  std::optional<Rational> prior;
  Rational q_sum;
  Rational bound;  // factor * chosen mass
};

struct QuadrantContext {
  Node x;
  Rational mass;
  std::vector<QuadrantNode> nodes;  // level |x|, binary order
  std::vector<QuadrantRound> rounds;
  // Witness failures that degraded a node to dead.
  std::vector<std::string> flags;
  std::optional<std::string> error;

  std::vector<Node> live() const;
  // Second-measure mass of the dead nodes at this level.
  Rational frontier(const DyadicMeasure& second) const;
};

// II in the one-dimensional game on the first coordinate, steering by the
// quadrant values of a G2 strategy tau. Each round keeps sum(q) < factor * m.
//   null sections:     tau wins G2(0, A) for II, factor = eps
//   positive sections: tau wins G2(1 - eps, A^c) for II, factor = 1 - beta
class SectionStrategyII : public StrategyII {
 public:
  enum class Kind { kNull, kPositive };
  SectionStrategyII(Kind kind, StrategyIIPtr tau, ProductMeasure mu, Rational source_stake,
                    Rational factor);

  std::optional<MoveII> reply(const Position& pos, const MoveI& offer) const override;
  std::string name() const override;

  // Bookkeeping after the rounds of pos; pos must follow this strategy.
  std::shared_ptr<const QuadrantContext> context(const Position& pos) const;

  Kind kind() const { return kind_; }
  const Rational& factor() const { return factor_; }
  const ProductMeasure& measure() const { return mu_; }
  const StrategyII& source() const { return *tau_; }
  const Rational& source_stake() const { return source_stake_; }

 private:
  std::shared_ptr<const QuadrantContext> root() const;
  std::shared_ptr<const QuadrantContext> advance(const QuadrantContext& ctx,
                                                 const MoveI& offer) const;
  std::vector<Rational> tuple(const QuadrantContext& ctx, const QuadrantNode& node) const;

  Kind kind_;
  StrategyIIPtr tau_;
  ProductMeasure mu_;
  Rational source_stake_;
  Rational factor_;
  mutable std::mutex lock_;
  mutable std::map<std::string, std::shared_ptr<const QuadrantContext>> memo_;
};

// tau: II winning G2(0, A). Result: II in G(0, B_eps).
std::shared_ptr<SectionStrategyII> fub1_transform(StrategyIIPtr tau, const ProductMeasure& mu,
                                                  const Rational& eps);

// beta with 1 - gamma = (1 - eps) / (1 - beta).
Rational fub2_beta(const Rational& eps, const Rational& gamma);
// tau: II winning G2(1 - eps, A^c). Result: II in G(1 - gamma, B^c).
std::shared_ptr<SectionStrategyII> fub2_transform(StrategyIIPtr tau, const ProductMeasure& mu,
                                                  const Rational& eps, const Rational& gamma);

struct SectionAudit {
  std::vector<std::string> failures;
  // Per level n = 0..rounds: the live nodes and the second-measure mass of
  // the dead ones.
  std::vector<std::vector<Node>> live;
  std::vector<Rational> frontier;
  // Live nodes at the last level as a clopen set of the second coordinate.
  Clopen tree = Clopen::full();
};

// Checks every round's bound, the frontier bound (strict for null sections,
// <= 1 - beta otherwise) and that every live node's play replays against tau
// with first coordinate x.
SectionAudit audit_sections(const SectionStrategyII& s, const Position& pos);

struct FubiniReport {
  Rational product_mass;
  // First-coordinate cylinders at depth d whose section has positive mass,
  // and their total first-measure mass; likewise for the second coordinate.
  std::vector<Node> heavy_rows;
  Rational heavy_row_mass;
  std::vector<Node> heavy_columns;
  Rational heavy_column_mass;
  // Sum over rows of mu(N_u) mu(A_u), and over columns.
  Rational row_integral;
  Rational column_integral;
  bool null_product = false;
  bool null_rows = false;
  bool null_columns = false;
  bool consistent = false;
};

// Requires A decided by the first d bits of each coordinate.
FubiniReport fubini_check(const ProductMeasure& mu, const Clopen& a, std::size_t d);

}  // namespace mgame

#endif  // MGAME_FUBINI_HPP_
