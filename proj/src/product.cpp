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

#include "mgame/product.hpp"

#include <stdexcept>

namespace mgame {

Clopen product_cylinder(const Node& u, const Node& v) {
  Clopen c = Clopen::full();
  for (std::size_t i = 0; i < u.size(); ++i) c = c & Clopen::coordinate(2 * i, u.str()[i] - '0');
  for (std::size_t i = 0; i < v.size(); ++i) c = c & Clopen::coordinate(2 * i + 1, v.str()[i] - '0');
  return c;
}

Clopen product_set(const Clopen& a, const Clopen& b) {
  Clopen out = Clopen::empty();
  const auto bs = b.antichain();
  for (const Node& u : a.antichain()) {
    for (const Node& v : bs) out = out | product_cylinder(u, v);
  }
  return out;
}

Rational product_mass_within(const Clopen& u, const ProductMeasure& mu, const PairNode& p) {
  Rational sum;
  for (const Node& n : (u & product_cylinder(p.first, p.second)).antichain()) {
    sum += mu.mass(deinterleave(n));
  }
  return sum;
}

Rational product_mass(const Clopen& u, const ProductMeasure& mu) {
  return product_mass_within(u, mu, PairNode());
}

Clopen section_at(const Clopen& u, const Node& x) {
  std::vector<Node> inside;
  for (const Node& v : level(x.size())) {
    if (u.classify(interleave({x, v})) == Cover::kInside) inside.push_back(v);
  }
  return Clopen::from_nodes(inside);
}

Clopen column_at(const Clopen& u, const Node& y) {
  std::vector<Node> inside;
  for (const Node& w : level(y.size())) {
    if (u.classify(interleave({w, y})) == Cover::kInside) inside.push_back(w);
  }
  return Clopen::from_nodes(inside);
}

CoverThresholds product_cover(const Clopen& u, const ProductMeasure& mu, const Position& pos) {
  CoverThresholds c;
  for (int q = 0; q < 4; ++q) {
    const PairNode child = pos.pair().child(q);
    c.cover.push_back(product_mass_within(u, mu, child));
    c.cap.push_back(mu.mass(child));
  }
  return c;
}

std::shared_ptr<CoverStrategyII> strategy_II_from_open_g2(const ProductMeasure& mu,
                                                          const Clopen& u, const Rational& s) {
  const Rational mass = product_mass(u, mu);
  if (mass > s) throw std::invalid_argument("open cover mass " + mass.str() + " > stake");
  return std::make_shared<CoverStrategyII>(
      [u, mu](const Position& pos) { return product_cover(u, mu, pos); },
      "open-II2[" + std::to_string(u.antichain().size()) + " cylinders]");
}

CoverFamilyII::CoverFamilyII(Family family, ProductMeasure mu, bool product, std::size_t max_k,
                             std::string label)
    : family_(std::move(family)), mu_(std::move(mu)), product_(product), max_k_(max_k),
      label_(std::move(label)) {
  for (std::size_t k = 0; k <= max_k_; ++k) {
    const Clopen u = family_(k);
    masses_.push_back(product_ ? product_mass(u, mu_) : u.mass(mu_.first));
  }
}

std::optional<std::size_t> CoverFamilyII::index_for(const Rational& e0) const {
  for (std::size_t k = 0; k <= max_k_; ++k) {
    if (masses_[k] < e0) return k;
  }
  return std::nullopt;
}

CoverThresholds CoverFamilyII::thresholds(std::size_t k, const Position& pos) const {
  const Clopen u = family_(k);
  return product_ ? product_cover(u, mu_, pos) : clopen_cover(u, mu_.first, pos);
}

std::optional<MoveII> CoverFamilyII::reply(const Position& pos, const MoveI& offer) const {
  const Rational e0 = pos.at_root() ? offer.total() : pos.history().front().offer.total();
  const auto k = index_for(e0);
  if (!k) return std::nullopt;
  return MoveII{cover_choice(thresholds(*k, pos), offer), std::nullopt};
}

std::vector<Rational> CoverFamilyII::exact_delta(const Position& pos, const Rational& r) const {
  if (pos.at_root()) {
    if (!r.is_zero()) throw std::logic_error("cover family: root infimum only known for r = 0");
    return std::vector<Rational>(static_cast<std::size_t>(pos.arity()));
  }
  const auto k = index_for(pos.history().front().offer.total());
  if (!k) throw std::logic_error("cover family: position outside the strategy's domain");
  return cover_delta(thresholds(*k, pos), r, false);
}

std::optional<MoveI> CoverFamilyII::witness(const Position& pos, const Rational& r, int side,
                                            const Rational& v) const {
  if (pos.at_root()) {
    // v alone: the chosen cover has mass below v, so no other cell can win.
    const std::size_t n = static_cast<std::size_t>(pos.arity());
    if (side < 0 || static_cast<std::size_t>(side) >= n) return std::nullopt;
    if (v <= r || v >= pos.child_measure(side) || !index_for(v)) return std::nullopt;
    MoveI mv;
    mv.masses.assign(n, Rational(0));
    mv.masses[static_cast<std::size_t>(side)] = v;
    return mv;
  }
  const auto k = index_for(pos.history().front().offer.total());
  if (!k) return std::nullopt;
  return cover_witness(thresholds(*k, pos), r, false, side, v);
}

std::shared_ptr<CoverFamilyII> avoid_zero_pair(const ProductMeasure& mu, std::size_t max_k) {
  auto family = [](std::size_t k) {
    const Node z(std::string(k, '0'));
    return product_cylinder(z, z);
  };
  return std::make_shared<CoverFamilyII>(family, mu, true, max_k, "avoid-00");
}

}  // namespace mgame
