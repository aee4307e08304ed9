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

#include "mgame/node.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgame {

Node::Node(std::string_view bits) : bits_(bits) {
  for (char c : bits_) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("node must be a bitstring: '" + bits_ + "'");
    }
  }
}

Node Node::repeat(int bit, std::size_t n) {
  Node out;
  out.bits_.assign(n, bit ? '1' : '0');
  return out;
}

Node Node::child(int bit) const {
  Node out = *this;
  out.bits_.push_back(bit ? '1' : '0');
  return out;
}

Node Node::parent() const {
  if (bits_.empty()) throw std::logic_error("root has no parent");
  Node out = *this;
  out.bits_.pop_back();
  return out;
}

Node Node::prefix(std::size_t len) const {
  Node out;
  out.bits_ = bits_.substr(0, std::min(len, bits_.size()));
  return out;
}

Node Node::concat(const Node& tail) const {
  Node out = *this;
  out.bits_ += tail.bits_;
  return out;
}

bool Node::is_prefix_of(const Node& other) const {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

std::vector<Node> level(std::size_t n) {
  std::vector<Node> out{Node()};
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<Node> next;
    next.reserve(out.size() * 2);
    for (const Node& t : out) {
      next.push_back(t.child(0));
      next.push_back(t.child(1));
    }
    out = std::move(next);
  }
  return out;
}

bool is_antichain(const std::vector<Node>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i].comparable(nodes[j])) return false;
    }
  }
  return true;
}

Node interleave(const PairNode& p) {
  if (p.first.size() != p.second.size() && p.first.size() != p.second.size() + 1) {
    throw std::invalid_argument("interleave: incompatible lengths");
  }
  std::string out;
  out.reserve(p.first.size() + p.second.size());
  for (std::size_t i = 0; i < p.first.size(); ++i) {
    out.push_back(p.first.str()[i]);
    if (i < p.second.size()) out.push_back(p.second.str()[i]);
  }
  return Node(out);
}

PairNode deinterleave(const Node& n) {
  std::string a, b;
  for (std::size_t i = 0; i < n.size(); ++i) (i % 2 ? b : a).push_back(n.str()[i]);
  return {Node(a), Node(b)};
}

}  // namespace mgame
