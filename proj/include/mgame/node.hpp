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

#ifndef MGAME_NODE_HPP_
#define MGAME_NODE_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace mgame {

// A finite binary string t, indexing the cylinder N_t of Cantor space.
// Stored as a string of '0'/'1' characters; the empty node is the root.
class Node {
 public:
  Node() = default;
  // Throws std::invalid_argument if bits contains anything but '0'/'1'.
  explicit Node(std::string_view bits);

  static Node repeat(int bit, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int operator[](std::size_t i) const { return bits_[i] - '0'; }
  int back() const { return bits_.back() - '0'; }
  const std::string& str() const { return bits_; }

  Node child(int bit) const;
  Node parent() const;
  Node prefix(std::size_t len) const;
  Node concat(const Node& tail) const;

  bool is_prefix_of(const Node& other) const;
  bool comparable(const Node& other) const {
    return is_prefix_of(other) || other.is_prefix_of(*this);
  }

  friend bool operator==(const Node&, const Node&) = default;
  // Length-lexicographic (shortlex) order.
  friend std::strong_ordering operator<=>(const Node& a, const Node& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.bits_ <=> b.bits_;
  }

 private:
  std::string bits_;
};

// All nodes of length n in lexicographic order.
std::vector<Node> level(std::size_t n);

// True iff no element is a prefix of another.
bool is_antichain(const std::vector<Node>& nodes);

// A pair-node of the four-quadrant game: first and second coordinate strings
// of equal length.
struct PairNode {
  Node first;
  Node second;

  std::size_t size() const { return first.size(); }
  PairNode child(int quadrant) const {
    return {first.child(quadrant >> 1), second.child(quadrant & 1)};
  }
  friend bool operator==(const PairNode&, const PairNode&) = default;
  friend auto operator<=>(const PairNode&, const PairNode&) = default;
};

// Merges a pair into one string: first[0] second[0] first[1] second[1] ...
// Lengths may differ by at most one (first the longer).
Node interleave(const PairNode& p);
// Inverse of interleave.
PairNode deinterleave(const Node& n);

}  // namespace mgame

template <>
struct std::hash<mgame::Node> {
  std::size_t operator()(const mgame::Node& n) const {
    return std::hash<std::string>{}(n.str()) ^ n.size();
  }
};

#endif  // MGAME_NODE_HPP_
