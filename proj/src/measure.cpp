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

#include "mgame/measure.hpp"

#include <stdexcept>

namespace mgame {

bool Atom::in_cylinder(const Node& t) const {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (bit(i) != t[i]) return false;
  }
  return true;
}

DyadicMeasure DyadicMeasure::fair() {
  static const auto impl = std::make_shared<const Impl>();
  return DyadicMeasure(impl);
}

DyadicMeasure DyadicMeasure::bernoulli(const Rational& p) {
  if (p.sign() < 0 || p > Rational(1)) {
    throw std::invalid_argument("bernoulli parameter outside [0,1]: " + p.str());
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kBernoulli;
  impl->p = p;
  return DyadicMeasure(std::move(impl));
}

DyadicMeasure DyadicMeasure::atoms(std::vector<Atom> atoms) {
  Rational total;
  for (const Atom& a : atoms) {
    if (a.cycle.empty()) throw std::invalid_argument("atom with empty cycle");
    if (a.weight.sign() < 0) throw std::invalid_argument("negative atom weight");
    total += a.weight;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("atom weights sum to " + total.str());
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kAtoms;
  impl->atoms = std::move(atoms);
  return DyadicMeasure(std::move(impl));
}

DyadicMeasure DyadicMeasure::explicit_table(std::size_t depth,
                                            std::vector<Rational> weights,
                                            const Rational& tail_p) {
  if (depth > 20) throw std::invalid_argument("explicit table too deep");
  if (weights.size() != (std::size_t{1} << depth)) {
    throw std::invalid_argument("explicit table needs 2^depth weights");
  }
  if (tail_p.sign() < 0 || tail_p > Rational(1)) {
    throw std::invalid_argument("tail parameter outside [0,1]");
  }
  Rational total;
  for (const Rational& w : weights) {
    if (w.sign() < 0) throw std::invalid_argument("negative table weight");
    total += w;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("table weights sum to " + total.str());
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::kExplicit;
  impl->p = tail_p;
  impl->depth = depth;
  impl->levels.resize(depth + 1);
  impl->levels[depth] = std::move(weights);
  for (std::size_t k = depth; k-- > 0;) {
    auto& up = impl->levels[k];
    const auto& down = impl->levels[k + 1];
    up.resize(down.size() / 2);
    for (std::size_t i = 0; i < up.size(); ++i) up[i] = down[2 * i] + down[2 * i + 1];
  }
  return DyadicMeasure(std::move(impl));
}

namespace {

Rational product_mass(const Rational& p, const Node& t, std::size_t from) {
  std::size_t ones = 0, zeros = 0;
  for (std::size_t i = from; i < t.size(); ++i) (t[i] ? ones : zeros)++;
  return pow(p, ones) * pow(Rational(1) - p, zeros);
}

}  // namespace

Rational DyadicMeasure::mass(const Node& t) const {
  switch (impl_->kind) {
    case Kind::kFair:
      return pow2_neg(t.size());
    case Kind::kBernoulli:
      return product_mass(impl_->p, t, 0);
    case Kind::kAtoms: {
      Rational m;
      for (const Atom& a : impl_->atoms) {
        if (a.in_cylinder(t)) m += a.weight;
      }
      return m;
    }
    case Kind::kExplicit: {
      const std::size_t k = std::min(t.size(), impl_->depth);
      std::size_t index = 0;
      for (std::size_t i = 0; i < k; ++i) index = index * 2 + t[i];
      const Rational& head = impl_->levels[k][index];
      if (t.size() <= impl_->depth || head.is_zero()) return head;
      return head * product_mass(impl_->p, t, impl_->depth);
    }
  }
  return Rational();
}

std::optional<std::size_t> DyadicMeasure::product_from() const {
  switch (impl_->kind) {
    case Kind::kFair:
    case Kind::kBernoulli:
      return 0;
    case Kind::kExplicit:
      return impl_->depth;
    case Kind::kAtoms:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string DyadicMeasure::describe() const {
  switch (impl_->kind) {
    case Kind::kFair:
      return "fair";
    case Kind::kBernoulli:
      return "bernoulli(" + impl_->p.str() + ")";
    case Kind::kAtoms:
      return "atoms(" + std::to_string(impl_->atoms.size()) + ")";
    case Kind::kExplicit:
      return "explicit(depth " + std::to_string(impl_->depth) + ")";
  }
  return "?";
}

bool operator==(const DyadicMeasure& a, const DyadicMeasure& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case DyadicMeasure::Kind::kFair:
      return true;
    case DyadicMeasure::Kind::kBernoulli:
      return a.impl_->p == b.impl_->p;
    case DyadicMeasure::Kind::kAtoms: {
      const auto& x = a.impl_->atoms;
      const auto& y = b.impl_->atoms;
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].prefix != y[i].prefix || x[i].cycle != y[i].cycle ||
            x[i].weight != y[i].weight)
          return false;
      }
      return true;
    }
    case DyadicMeasure::Kind::kExplicit:
      return a.impl_->depth == b.impl_->depth && a.impl_->p == b.impl_->p &&
             a.impl_->levels.back() == b.impl_->levels.back();
  }
  return false;
}

}  // namespace mgame
