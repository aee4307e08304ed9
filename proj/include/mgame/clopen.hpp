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

#ifndef MGAME_CLOPEN_HPP_
#define MGAME_CLOPEN_HPP_

#include <memory>
#include <vector>

#include "mgame/measure.hpp"
#include "mgame/node.hpp"
#include "mgame/rational.hpp"

namespace mgame {

enum class Cover { kInside, kOutside, kMixed };

// A clopen subset of Cantor space: a finite union of cylinders.
//
// Stored as a prefix trie whose nodes test one coordinate per level (no
// variable skipping). Sub-tries are shared, so sets such as {x : x_60 = 1}
// or intersections of long coordinate blocks stay small. Immutable.
class Clopen {
 public:
  struct Trie;
  using Ptr = std::shared_ptr<const Trie>;

  static Clopen empty();
  static Clopen full();
  static Clopen cylinder(const Node& t);
  // Union of cylinders; the nodes need not form an antichain.
  static Clopen from_nodes(const std::vector<Node>& nodes);
  // {x : x_index = bit}.
  static Clopen coordinate(std::size_t index, int bit);
  // {x : x_i = bit for some i in [lo, hi)}.
  static Clopen any_coordinate(std::size_t lo, std::size_t hi, int bit);

  Clopen() : Clopen(empty()) {}

  bool is_empty() const;
  bool is_full() const;

  Clopen operator&(const Clopen& o) const;
  Clopen operator|(const Clopen& o) const;
  Clopen operator~() const;
  Clopen minus(const Clopen& o) const { return *this & ~o; }
  // This set intersected with N_t.
  Clopen restrict(const Node& t) const { return *this & cylinder(t); }

  // Whether N_t lies inside, outside, or across the set.
  Cover classify(const Node& t) const;
  // Length beyond which membership no longer depends on further bits.
  std::size_t depth() const;
  // Minimal cylinders whose union is the set, in shortlex order.
  std::vector<Node> antichain() const;

  // mu(C).
  Rational mass(const DyadicMeasure& mu) const;
  // mu(C ∩ N_t).
  Rational mass_within(const DyadicMeasure& mu, const Node& t) const;

  bool contains(const Atom& point) const;

  friend bool operator==(const Clopen& a, const Clopen& b);

 private:
  explicit Clopen(Ptr root) : root_(std::move(root)) {}
  Ptr root_;
};

}  // namespace mgame

#endif  // MGAME_CLOPEN_HPP_
