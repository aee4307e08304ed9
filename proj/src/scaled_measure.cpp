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

#include "mgame/scaled_measure.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace mgame {

struct ScaledMeasure::Impl {
  Rule rule;
  std::string label;
  std::mutex mu;
  std::unordered_map<Node, Rational> memo;
};

ScaledMeasure ScaledMeasure::from_rule(Rule rule, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->rule = std::move(rule);
  impl->label = std::move(label);
  return ScaledMeasure(impl);
}

ScaledMeasure ScaledMeasure::from_measure(const DyadicMeasure& mu) {
  return from_rule([mu](const Node& t) { return mu.mass(t); }, "measure:" + mu.describe());
}

ScaledMeasure ScaledMeasure::from_table(std::map<Node, Rational> table, std::size_t depth,
                                        const DyadicMeasure& mu) {
  auto shared = std::make_shared<const std::map<Node, Rational>>(std::move(table));
  auto lookup = [shared](const Node& t) {
    auto it = shared->find(t);
    return it == shared->end() ? Rational(0) : it->second;
  };
  return from_rule(
      [lookup, depth, mu](const Node& t) {
        if (t.size() <= depth) return lookup(t);
        const Node a = t.prefix(depth);
        const Rational ma = lookup(a);
        if (ma.is_zero()) return Rational(0);
        const Rational base = mu.mass(a);
        if (base.is_zero()) return Rational(0);
        return ma * mu.mass(t) / base;
      },
      "table:depth=" + std::to_string(depth));
}

const std::string& ScaledMeasure::label() const { return impl_->label; }

Rational ScaledMeasure::operator()(const Node& t) const {
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->memo.find(t);
    if (it != impl_->memo.end()) return it->second;
  }
  Rational v = impl_->rule(t);
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->memo.emplace(t, v);
  return v;
}

std::vector<Node> ScaledMeasure::support_level(std::size_t d) const {
  std::vector<Node> out;
  std::vector<Node> frontier{Node()};
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Node> next;
    for (const Node& t : frontier) {
      for (int b = 0; b < 2; ++b) {
        Node c = t.child(b);
        if ((*this)(c).sign() > 0) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  if (d == 0 && root().sign() <= 0) return out;
  return frontier;
}

ScaledReport validate_scaled_measure(const ScaledMeasure& m, const DyadicMeasure& mu,
                                     std::size_t d) {
  ScaledReport report;
  std::set<std::string> seen;
  auto flag = [&](const char* inv, const Node& t, std::string detail) {
    if (!seen.insert(inv).second) return;
    report.violations.push_back({inv, t, std::move(detail)});
  };
  const Rational root = m.root();
  if (root.sign() <= 0) flag("root_positive", Node(), "M(root) = " + root.str());
  // Shortlex walk over every node of depth <= d.
  std::vector<Node> level{Node()};
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<Node> next;
    for (const Node& t : level) {
      const Rational v = m(t);
      if (v.sign() < 0) flag("nonnegative", t, "M = " + v.str());
      const Rational cap = mu.mass(t);
      if (v > cap) flag("dominated", t, "M = " + v.str() + " > mu = " + cap.str());
      if (k < d) {
        const Rational sum = m(t.child(0)) + m(t.child(1));
        if (sum != v) flag("additive", t, "M = " + v.str() + " but children sum to " + sum.str());
        next.push_back(t.child(0));
        next.push_back(t.child(1));
      }
    }
    level = std::move(next);
  }
  return report;
}

PrunedMeasure prune_scaled_measure(const ScaledMeasure& m, const DyadicMeasure& mu,
                                   const Rational& eps, std::size_t d) {
  const Rational root = m.root();
  if (eps.sign() <= 0 || eps >= root) {
    throw std::invalid_argument("prune needs 0 < eps < M(root)");
  }
  std::vector<Node> removed;
  std::vector<Node> stack{Node()};
  while (!stack.empty()) {
    Node t = std::move(stack.back());
    stack.pop_back();
    if (m(t) < eps * mu.mass(t)) {
      removed.push_back(t);
      continue;
    }
    if (t.size() < d) {
      stack.push_back(t.child(1));
      stack.push_back(t.child(0));
    }
  }
  // Removed mass below each proper ancestor of a removed node.
  auto below = std::make_shared<std::unordered_map<Node, Rational>>();
  auto cut = std::make_shared<std::set<Node>>(removed.begin(), removed.end());
  for (const Node& a : removed) {
    const Rational v = m(a);
    for (std::size_t len = 0; len < a.size(); ++len) (*below)[a.prefix(len)] += v;
  }
  ScaledMeasure base = m;
  ScaledMeasure pruned = ScaledMeasure::from_rule(
      [base, below, cut](const Node& t) {
        for (std::size_t len = 0; len <= t.size(); ++len) {
          if (cut->count(t.prefix(len))) return Rational(0);
        }
        auto it = below->find(t);
        return it == below->end() ? base(t) : base(t) - it->second;
      },
      "pruned:" + m.label() + ",eps=" + eps.str());
  std::sort(removed.begin(), removed.end());
  return {pruned, removed};
}

}  // namespace mgame
