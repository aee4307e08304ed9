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

#ifndef MGAME_PRODUCT_HPP_
#define MGAME_PRODUCT_HPP_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "mgame/clopen.hpp"
#include "mgame/strategies.hpp"

namespace mgame {

// Clopen subsets of the product space are stored over interleaved
// coordinates x_0 y_0 x_1 y_1 ...

// A x B.
Clopen product_set(const Clopen& a, const Clopen& b);
// N_u x N_v for nodes of any lengths.
Clopen product_cylinder(const Node& u, const Node& v);

Rational product_mass(const Clopen& u, const ProductMeasure& mu);
// (mu x mu)(U ∩ (N_p.first x N_p.second)).
Rational product_mass_within(const Clopen& u, const ProductMeasure& mu, const PairNode& p);

// Union of the N_v, |v| = |x|, with N_x x N_v inside U. Equals the section
// at every point of N_x once |x| is at least half the depth of U.
Clopen section_at(const Clopen& u, const Node& x);
// The same for the other coordinate: union of N_u with N_u x N_y inside U.
Clopen column_at(const Clopen& u, const Node& y);

// Cover thresholds of U in the four quadrants below the current pair node.
CoverThresholds product_cover(const Clopen& u, const ProductMeasure& mu, const Position& pos);

// II in G2(s, U^c) keeping the run out of U. Throws unless (mu x mu)(U) <= s.
std::shared_ptr<CoverStrategyII> strategy_II_from_open_g2(const ProductMeasure& mu,
                                                          const Clopen& u, const Rational& s);

// II at stake 0 avoiding a null set given as the intersection of shrinking
// clopen covers U_0 ⊇ U_1 ⊇ ...: on a first offer of total e0 it fixes the
// least k <= max_k with mass(U_k) < e0 and then avoids U_k. Works in G
// (second measure ignored) and in G2.
class CoverFamilyII : public StrategyII {
 public:
  using Family = std::function<Clopen(std::size_t)>;
  CoverFamilyII(Family family, ProductMeasure mu, bool product, std::size_t max_k,
                std::string label);

  std::optional<MoveII> reply(const Position& pos, const MoveI& offer) const override;
  std::string name() const override { return label_; }
  bool has_exact_delta() const override { return true; }
  // At the root only r = 0 is supported: every cell then has infimum 0.
  std::vector<Rational> exact_delta(const Position& pos, const Rational& r) const override;
  std::optional<MoveI> witness(const Position& pos, const Rational& r, int side,
                               const Rational& v) const override;

  // The cover index fixed by a first offer of total e0; nullopt if none fits.
  std::optional<std::size_t> index_for(const Rational& e0) const;

 private:
  CoverThresholds thresholds(std::size_t k, const Position& pos) const;

  Family family_;
  ProductMeasure mu_;
  bool product_;
  std::size_t max_k_;
  std::string label_;
  std::vector<Rational> masses_;
};

// Covers N_{0^k} x N_{0^k} of the point (0^ω, 0^ω).
std::shared_ptr<CoverFamilyII> avoid_zero_pair(const ProductMeasure& mu, std::size_t max_k = 40);

}  // namespace mgame

#endif  // MGAME_PRODUCT_HPP_
