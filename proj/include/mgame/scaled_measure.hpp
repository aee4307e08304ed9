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

#ifndef MGAME_SCALED_MEASURE_HPP_
#define MGAME_SCALED_MEASURE_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mgame/measure.hpp"
#include "mgame/node.hpp"
#include "mgame/rational.hpp"

namespace mgame {

// A sub-mass assignment M on the binary tree. Values come from an explicit
// table down to some depth, then from a rule below it. Lookups are memoized;
// copies share the memo, which is guarded.
class ScaledMeasure {
 public:
  using Rule = std::function<Rational(const Node&)>;

  // M = mu.
  static ScaledMeasure from_measure(const DyadicMeasure& mu);
  // Explicit values for nodes of depth <= depth (missing entries are 0).
  // Below the table, M(t) = M(a) * mu(N_t) / mu(N_a) for the ancestor a at
  // the table depth.
  static ScaledMeasure from_table(std::map<Node, Rational> table, std::size_t depth,
                                  const DyadicMeasure& mu);
  // Arbitrary rule, evaluated lazily.
  static ScaledMeasure from_rule(Rule rule, std::string label);

  Rational operator()(const Node& t) const;
  Rational root() const { return (*this)(Node()); }
  const std::string& label() const;

  // Nodes of length d with positive mass, in lexicographic order.
  std::vector<Node> support_level(std::size_t d) const;

 private:
  struct Impl;
  explicit ScaledMeasure(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

struct ScaledViolation {
  // One of root_positive, nonnegative, dominated, additive.
  std::string invariant;
  Node node;
  std::string detail;
};

struct ScaledReport {
  std::vector<ScaledViolation> violations;
  bool valid() const { return violations.empty(); }
};

// Checks positivity at the root, 0 <= M(t) <= mu(N_t) for |t| <= d and
// M(t) = M(t0) + M(t1) for |t| < d. Reports the first failure (shortlex) of
// each invariant.
ScaledReport validate_scaled_measure(const ScaledMeasure& m, const DyadicMeasure& mu,
                                     std::size_t d);

struct PrunedMeasure {
  ScaledMeasure measure;
  // Minimal nodes of depth <= d with M(t) < eps * mu(N_t).
  std::vector<Node> removed;
};

// Cuts every minimal node with M(t) < eps * mu(N_t) (searched to depth d)
// and subtracts the removed mass from its ancestors. Throws
// std::invalid_argument unless 0 < eps < M(root).
PrunedMeasure prune_scaled_measure(const ScaledMeasure& m, const DyadicMeasure& mu,
                                   const Rational& eps, std::size_t d);

}  // namespace mgame

#endif  // MGAME_SCALED_MEASURE_HPP_
