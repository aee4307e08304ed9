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

#ifndef MGAME_CERTIFICATE_HPP_
#define MGAME_CERTIFICATE_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgame/game.hpp"
#include "mgame/scaled_measure.hpp"
#include "mgame/set_expr.hpp"
#include "mgame/strategy.hpp"

namespace mgame {

// Scaled measure played by an I strategy, tabulated to `depth`.
struct IWitness {
  Rational stake;
  std::size_t depth = 0;
  // Nonzero values only; absent nodes carry 0.
  std::map<Node, Rational> values;
  // Set when the strategy broke a rule while being tabulated.
  std::optional<std::string> aborted;

  Rational at(const Node& t) const;
  Rational root() const { return at(Node()); }
  std::vector<Node> support(std::size_t level) const;
};

// Tree built from an II strategy: m_u for every node to `depth` (a node is
// in the tree when m_u < mu(N_u)) and the play p(u) reaching each tree node.
struct IIWitness {
  Rational stake;
  Rational eps;
  std::size_t depth = 0;
  std::map<Node, Rational> values;
  std::map<Node, std::vector<Round>> plays;
  // Threshold search was inexact; `slack` bounds the excess over the exact
  // level budget.
  bool approximate = false;
  Rational slack;

  bool in_tree(const Node& u, const DyadicMeasure& mu) const;
  // Tree nodes at a level, lexicographic.
  std::vector<Node> tree_level(std::size_t level, const DyadicMeasure& mu) const;
  // The clopen set of depth-`level` tree cylinders.
  Clopen tree_clopen(std::size_t level, const DyadicMeasure& mu) const;
};

struct Certificate {
  enum class Player { kI, kII };
  Player player = Player::kI;
  std::optional<IWitness> i_witness;
  std::optional<IIWitness> ii_witness;
};

// Tabulates the scaled measure of `sigma` from `start` over every legal II
// path to depth d (nodes off those paths get 0).
IWitness extract_scaled_measure(const StrategyI& sigma, const Position& start, std::size_t d);

// Builds the tree of the II strategy `tau` at stake start.stake() with budget
// eps to depth d. Black-box strategies are probed at resolution Q.
IIWitness extract_tree(const StrategyII& tau, const Position& start, const Rational& eps,
                       std::size_t d, int q = 64);

// Failures found while checking a certificate; empty when sound. The
// payoff, when given, is II's set in the game the certificate is for.
std::vector<std::string> audit_i_witness(const IWitness& w, const DyadicMeasure& mu,
                                         const SetExpr* payoff);
std::vector<std::string> audit_ii_witness(const IIWitness& w, const StrategyII& tau,
                                          const Position& start, const SetExpr* payoff);

// Level sum of m_u and the complement frontier mass.
Rational level_sum(const IIWitness& w, std::size_t level);
Rational complement_frontier(const IIWitness& w, std::size_t level, const DyadicMeasure& mu);

}  // namespace mgame

#endif  // MGAME_CERTIFICATE_HPP_
