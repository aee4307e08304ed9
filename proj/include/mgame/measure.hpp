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

#ifndef MGAME_MEASURE_HPP_
#define MGAME_MEASURE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mgame/node.hpp"
#include "mgame/rational.hpp"

namespace mgame {

// A point mass on an eventually periodic branch prefix·cycle·cycle·…
struct Atom {
  Node prefix;
  Node cycle;  // non-empty
  Rational weight;

  int bit(std::size_t i) const {
    return i < prefix.size() ? prefix[i]
                             : cycle[(i - prefix.size()) % cycle.size()];
  }
  bool in_cylinder(const Node& t) const;
};

// Borel probability measure on Cantor space given by a consistent rational
// weight on every node: w(root) = 1 and w(t) = w(t0) + w(t1).
//
// Kinds: fair coin, bernoulli(p) where child 1 receives fraction p, a finite
// list of atoms, or an explicit table of weights at a fixed depth extended
// below by a fair or bernoulli tail. Values are immutable and cheap to copy.
class DyadicMeasure {
 public:
  enum class Kind { kFair, kBernoulli, kAtoms, kExplicit };

  static DyadicMeasure fair();
  // Throws std::invalid_argument unless 0 <= p <= 1.
  static DyadicMeasure bernoulli(const Rational& p);
  // Throws unless weights are non-negative, sum to 1, and cycles non-empty.
  static DyadicMeasure atoms(std::vector<Atom> atoms);
  // weights[i] is the mass of the depth-`depth` node whose bits spell i in
  // binary, most significant bit first. `tail_p` is the fraction sent to
  // child 1 below that depth (1/2 for a fair tail).
  static DyadicMeasure explicit_table(std::size_t depth,
                                      std::vector<Rational> weights,
                                      const Rational& tail_p);

  DyadicMeasure() : DyadicMeasure(fair()) {}

  Kind kind() const { return impl_->kind; }
  // mu(N_t).
  Rational mass(const Node& t) const;

  // Depth at and below which every split sends fraction product_p() to
  // child 1, independent of the node. Empty for atom measures.
  std::optional<std::size_t> product_from() const;
  const Rational& product_p() const { return impl_->p; }

  const Rational& bernoulli_p() const { return impl_->p; }
  const std::vector<Atom>& atom_list() const { return impl_->atoms; }
  std::size_t table_depth() const { return impl_->depth; }
  const std::vector<Rational>& table() const { return impl_->levels.back(); }

  std::string describe() const;

  friend bool operator==(const DyadicMeasure& a, const DyadicMeasure& b);

 private:
  struct Impl {
    Kind kind = Kind::kFair;
    Rational p{1, 2};
    std::vector<Atom> atoms;
    std::size_t depth = 0;
    // levels[k][i]: mass of the depth-k node with binary index i.
    std::vector<std::vector<Rational>> levels;
  };
  explicit DyadicMeasure(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

// Product of two measures, the measure of the four-quadrant game.
struct ProductMeasure {
  DyadicMeasure first;
  DyadicMeasure second;

  Rational mass(const Node& u, const Node& v) const {
    return first.mass(u) * second.mass(v);
  }
  Rational mass(const PairNode& p) const { return mass(p.first, p.second); }
};

}  // namespace mgame

#endif  // MGAME_MEASURE_HPP_
