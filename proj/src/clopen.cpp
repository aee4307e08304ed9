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

#include "mgame/clopen.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <utility>

namespace mgame {

struct Clopen::Trie {
  enum class Tag { kEmpty, kFull, kBranch };
  Tag tag = Tag::kEmpty;
  Ptr child[2];
};

namespace {

using Trie = Clopen::Trie;
using Ptr = Clopen::Ptr;
using Tag = Trie::Tag;

const Ptr& empty_trie() {
  static const Ptr p = std::make_shared<const Trie>(Trie{Tag::kEmpty, {}});
  return p;
}

const Ptr& full_trie() {
  static const Ptr p = std::make_shared<const Trie>(Trie{Tag::kFull, {}});
  return p;
}

Ptr branch(Ptr zero, Ptr one) {
  if (zero->tag == one->tag && zero->tag != Tag::kBranch) return zero;
  return std::make_shared<const Trie>(Trie{Tag::kBranch, {std::move(zero), std::move(one)}});
}

struct PairHash {
  std::size_t operator()(const std::pair<const Trie*, const Trie*>& p) const {
    return std::hash<const void*>{}(p.first) * 1000003u ^
           std::hash<const void*>{}(p.second);
  }
};

// Binary set operation; `is_and` selects intersection, otherwise union.
class Apply {
 public:
  explicit Apply(bool is_and) : is_and_(is_and) {}

  Ptr run(const Ptr& a, const Ptr& b) {
    if (is_and_) {
      if (a->tag == Tag::kEmpty || b->tag == Tag::kEmpty) return empty_trie();
      if (a->tag == Tag::kFull) return b;
      if (b->tag == Tag::kFull) return a;
    } else {
      if (a->tag == Tag::kFull || b->tag == Tag::kFull) return full_trie();
      if (a->tag == Tag::kEmpty) return b;
      if (b->tag == Tag::kEmpty) return a;
    }
    if (a == b) return a;
    const auto key = std::make_pair(a.get(), b.get());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Ptr out = branch(run(a->child[0], b->child[0]), run(a->child[1], b->child[1]));
    memo_.emplace(key, out);
    return out;
  }

 private:
  bool is_and_;
  std::unordered_map<std::pair<const Trie*, const Trie*>, Ptr, PairHash> memo_;
};

Ptr complement(const Ptr& a, std::unordered_map<const Trie*, Ptr>& memo) {
  if (a->tag == Tag::kEmpty) return full_trie();
  if (a->tag == Tag::kFull) return empty_trie();
  if (auto it = memo.find(a.get()); it != memo.end()) return it->second;
  Ptr out = branch(complement(a->child[0], memo), complement(a->child[1], memo));
  memo.emplace(a.get(), out);
  return out;
}

const Trie* descend(const Trie* t, const Node& node, std::size_t from = 0) {
  for (std::size_t i = from; i < node.size() && t->tag == Tag::kBranch; ++i) {
    t = t->child[node[i]].get();
  }
  return t;
}

}  // namespace

Clopen Clopen::empty() { return Clopen(empty_trie()); }
Clopen Clopen::full() { return Clopen(full_trie()); }

Clopen Clopen::cylinder(const Node& t) {
  Ptr p = full_trie();
  for (std::size_t i = t.size(); i-- > 0;) {
    p = t[i] ? branch(empty_trie(), p) : branch(p, empty_trie());
  }
  return Clopen(p);
}

Clopen Clopen::from_nodes(const std::vector<Node>& nodes) {
  Clopen out = empty();
  for (const Node& t : nodes) out = out | cylinder(t);
  return out;
}

Clopen Clopen::coordinate(std::size_t index, int bit) {
  Ptr p = bit ? branch(empty_trie(), full_trie()) : branch(full_trie(), empty_trie());
  for (std::size_t i = 0; i < index; ++i) p = branch(p, p);
  return Clopen(p);
}

Clopen Clopen::any_coordinate(std::size_t lo, std::size_t hi, int bit) {
  if (lo >= hi) return empty();
  // Levels hi-1 down to lo: hitting `bit` ends in Full, otherwise continue.
  Ptr p = empty_trie();
  for (std::size_t i = hi; i-- > lo;) {
    p = bit ? branch(p, full_trie()) : branch(full_trie(), p);
  }
  for (std::size_t i = 0; i < lo; ++i) p = branch(p, p);
  return Clopen(p);
}

bool Clopen::is_empty() const { return root_->tag == Tag::kEmpty; }
bool Clopen::is_full() const { return root_->tag == Tag::kFull; }

Clopen Clopen::operator&(const Clopen& o) const {
  return Clopen(Apply(true).run(root_, o.root_));
}

Clopen Clopen::operator|(const Clopen& o) const {
  return Clopen(Apply(false).run(root_, o.root_));
}

Clopen Clopen::operator~() const {
  std::unordered_map<const Trie*, Ptr> memo;
  return Clopen(complement(root_, memo));
}

Cover Clopen::classify(const Node& t) const {
  const Trie* n = descend(root_.get(), t);
  switch (n->tag) {
    case Tag::kFull: return Cover::kInside;
    case Tag::kEmpty: return Cover::kOutside;
    case Tag::kBranch: return Cover::kMixed;
  }
  return Cover::kMixed;
}

std::size_t Clopen::depth() const {
  std::unordered_map<const Trie*, std::size_t> memo;
  std::function<std::size_t(const Trie*)> go = [&](const Trie* t) -> std::size_t {
    if (t->tag != Tag::kBranch) return 0;
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    const std::size_t d = 1 + std::max(go(t->child[0].get()), go(t->child[1].get()));
    memo.emplace(t, d);
    return d;
  };
  return go(root_.get());
}

std::vector<Node> Clopen::antichain() const {
  std::vector<Node> out;
  std::function<void(const Trie*, const Node&)> go = [&](const Trie* t, const Node& at) {
    if (t->tag == Tag::kFull) {
      out.push_back(at);
    } else if (t->tag == Tag::kBranch) {
      go(t->child[0].get(), at.child(0));
      go(t->child[1].get(), at.child(1));
    }
  };
  go(root_.get(), Node());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class MassEval {
 public:
  explicit MassEval(const DyadicMeasure& mu) : mu_(mu), from_(mu.product_from()) {}

  // mu(set(t) ∩ N_at) where t is the sub-trie reached at node `at`.
  Rational eval(const Trie* t, const Node& at) {
    if (t->tag == Tag::kEmpty) return Rational();
    const Rational m = mu_.mass(at);
    if (t->tag == Tag::kFull || m.is_zero()) return t->tag == Tag::kFull ? m : Rational();
    if (from_ && at.size() >= *from_) return m * relative(t);
    return eval(t->child[0].get(), at.child(0)) + eval(t->child[1].get(), at.child(1));
  }

 private:
  // Conditional mass of the sub-trie under the constant product split.
  Rational relative(const Trie* t) {
    if (t->tag == Tag::kEmpty) return Rational();
    if (t->tag == Tag::kFull) return Rational(1);
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    const Rational& p = mu_.product_p();
    Rational r = (Rational(1) - p) * relative(t->child[0].get()) +
                 p * relative(t->child[1].get());
    memo_.emplace(t, r);
    return r;
  }

  const DyadicMeasure& mu_;
  std::optional<std::size_t> from_;
  std::unordered_map<const Trie*, Rational> memo_;
};

bool contains_from(const Trie* t, const Atom& point, std::size_t from) {
  for (std::size_t i = from; t->tag == Tag::kBranch; ++i) {
    t = t->child[point.bit(i)].get();
  }
  return t->tag == Tag::kFull;
}

}  // namespace

Rational Clopen::mass(const DyadicMeasure& mu) const {
  return mass_within(mu, Node());
}

Rational Clopen::mass_within(const DyadicMeasure& mu, const Node& t) const {
  const Trie* sub = descend(root_.get(), t);
  if (mu.kind() == DyadicMeasure::Kind::kAtoms) {
    Rational m;
    for (const Atom& a : mu.atom_list()) {
      if (a.in_cylinder(t) && contains_from(sub, a, t.size())) m += a.weight;
    }
    return m;
  }
  return MassEval(mu).eval(sub, t);
}

bool Clopen::contains(const Atom& point) const {
  return contains_from(root_.get(), point, 0);
}

bool operator==(const Clopen& a, const Clopen& b) {
  // Equal iff the symmetric difference is empty.
  return (a.minus(b) | b.minus(a)).is_empty();
}

}  // namespace mgame
