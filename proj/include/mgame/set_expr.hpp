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

#ifndef MGAME_SET_EXPR_HPP_
#define MGAME_SET_EXPR_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mgame/clopen.hpp"
#include "mgame/events.hpp"
#include "mgame/measure.hpp"

namespace mgame {

struct MeasureBounds {
  Rational lower;
  Rational upper;
  // Set when a limsup was cut at its index horizon.
  bool truncated = false;
};

// A payoff set: clopen antichain, pruned closed tree, open union, limsup of
// a clopen family, or a boolean combination. Immutable; copies share state.
class SetExpr {
 public:
  enum class Kind {
    kClopen,
    kClosedTree,
    kOpenUnion,
    kLimSup,
    kIntersection,
    kUnion,
    kComplement
  };
  // Builtin predicates for closed trees and open unions.
  enum class Builtin { kNodes, kSubstring };

  // Throws std::invalid_argument if `antichain` is not an antichain.
  static SetExpr clopen(std::vector<Node> antichain);
  static SetExpr clopen(const Clopen& set);
  static SetExpr full() { return clopen(std::vector<Node>{Node()}); }
  static SetExpr empty() { return clopen(std::vector<Node>{}); }
  // Tree of strings compatible with some leaf; [T] is the union of N_leaf.
  static SetExpr closed_tree(std::vector<Node> leaves);
  // Tree of strings avoiding `pattern` as a substring.
  static SetExpr avoid_substring(const Node& pattern);
  static SetExpr open_union(std::vector<Node> nodes);
  // Open set of sequences containing `pattern` somewhere.
  static SetExpr contains_substring(const Node& pattern);
  static SetExpr limsup(EventFamily family, std::size_t horizon);
  static SetExpr intersection(std::vector<SetExpr> args);
  static SetExpr unite(std::vector<SetExpr> args);
  static SetExpr complement(SetExpr arg);

  Kind kind() const { return impl_->kind; }
  Builtin builtin() const { return impl_->builtin; }
  const std::vector<Node>& nodes() const { return impl_->nodes; }
  const Node& pattern() const { return impl_->pattern; }
  const std::vector<SetExpr>& args() const { return impl_->args; }
  const EventFamily& family() const { return impl_->family; }
  std::size_t horizon() const { return impl_->horizon; }

  // The set as an exact clopen, when it is one (limsups by truncation).
  const std::optional<Clopen>& as_clopen() const { return impl_->clopen; }
  bool truncated() const { return impl_->truncated; }

  // Inside / outside / mixed classification of N_t (three-valued logic for
  // combinations that are not exactly clopen).
  Cover classify(const Node& t) const;

  // Enclosure lower <= inner measure <= outer measure <= upper computed at
  // depth d. Exact for clopen sets.
  MeasureBounds bounds(const DyadicMeasure& mu, std::size_t d) const;
  // mu(S ∩ N_t) when S is clopen.
  std::optional<Rational> exact_mass_within(const DyadicMeasure& mu,
                                            const Node& t) const;

  std::string describe() const;

 private:
  struct Impl {
    Kind kind = Kind::kClopen;
    Builtin builtin = Builtin::kNodes;
    std::vector<Node> nodes;
    Node pattern;
    std::vector<SetExpr> args;
    EventFamily family;
    std::size_t horizon = 0;
    std::optional<Clopen> clopen;
    bool truncated = false;
  };
  explicit SetExpr(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  static SetExpr make(Impl impl);

  std::shared_ptr<const Impl> impl_;
};

}  // namespace mgame

#endif  // MGAME_SET_EXPR_HPP_
