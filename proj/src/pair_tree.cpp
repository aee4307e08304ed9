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

#include "mgame/pair_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgame {

std::string yword_str(const YWord& w) {
  std::string s;
  for (int d : w) {
    if (d < 0 || d > 9) throw std::invalid_argument("y-digit out of printable range");
    s.push_back(static_cast<char>('0' + d));
  }
  return s;
}

YWord parse_yword(const std::string& s) {
  YWord w;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad y-digit: " + s);
    w.push_back(c - '0');
  }
  return w;
}

bool is_prefix(const YWord& a, const YWord& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

namespace {
void check_alphabet(int k) {
  if (k < 1 || k > 10) throw std::invalid_argument("y-alphabet size must be in [1, 10]");
}
}  // namespace

PairTree PairTree::full(int k) {
  check_alphabet(k);
  PairTree t;
  t.kind_ = Kind::kFull;
  t.k_ = k;
  return t;
}

PairTree PairTree::empty(int k) {
  PairTree t = full(k);
  t.kind_ = Kind::kEmpty;
  t.clopen_ = Clopen::empty();
  return t;
}

PairTree PairTree::x_clopen(const std::vector<Node>& antichain, int k) {
  if (!is_antichain(antichain)) throw std::invalid_argument("x_clopen needs an antichain");
  PairTree t = full(k);
  t.kind_ = Kind::kXClopen;
  t.antichain_ = antichain;
  t.clopen_ = Clopen::from_nodes(antichain);
  return t;
}

PairTree PairTree::first_digit_match(int k) {
  if (k < 2) throw std::invalid_argument("first_digit_match needs k >= 2");
  PairTree t = full(k);
  t.kind_ = Kind::kFirstDigitMatch;
  return t;
}

PairTree PairTree::forbidden(std::vector<std::pair<Node, YWord>> rects, int k) {
  PairTree t = full(k);
  for (const auto& [u, v] : rects) {
    for (int d : v) {
      if (d < 0 || d >= k) throw std::invalid_argument("forbidden rectangle digit outside alphabet");
    }
  }
  t.kind_ = Kind::kForbidden;
  t.rects_ = std::move(rects);
  return t;
}

Cover PairTree::classify(const Node& u, const YWord& v) const {
  switch (kind_) {
    case Kind::kFull:
      return Cover::kInside;
    case Kind::kEmpty:
      return Cover::kOutside;
    case Kind::kXClopen:
      return clopen_.classify(u);
    case Kind::kFirstDigitMatch:
      if (u.empty() || v.empty()) return Cover::kMixed;
      return u[0] == v[0] ? Cover::kInside : Cover::kOutside;
    case Kind::kForbidden:
      for (const auto& [a, b] : rects_) {
        if (a.is_prefix_of(u) && is_prefix(b, v)) return Cover::kOutside;
      }
      return Cover::kMixed;
  }
  return Cover::kMixed;
}

std::optional<Clopen> PairTree::projection() const {
  switch (kind_) {
    case Kind::kFull:
    case Kind::kFirstDigitMatch:
      return Clopen::full();
    case Kind::kEmpty:
      return Clopen::empty();
    case Kind::kXClopen:
      return clopen_;
    case Kind::kForbidden:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string PairTree::describe() const {
  const std::string k = ",k=" + std::to_string(k_);
  switch (kind_) {
    case Kind::kFull:
      return "PairTree[full" + k + "]";
    case Kind::kEmpty:
      return "PairTree[empty" + k + "]";
    case Kind::kXClopen: {
      std::string s = "PairTree[x_clopen{";
      for (std::size_t i = 0; i < antichain_.size(); ++i) s += (i ? "," : "") + antichain_[i].str();
      return s + "}" + k + "]";
    }
    case Kind::kFirstDigitMatch:
      return "PairTree[first_digit_match" + k + "]";
    case Kind::kForbidden:
      return "PairTree[forbidden x" + std::to_string(rects_.size()) + k + "]";
  }
  return "?";
}

}  // namespace mgame
