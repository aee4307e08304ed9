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

#ifndef MGAME_UNFOLDING_HPP_
#define MGAME_UNFOLDING_HPP_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mgame/certificate.hpp"
#include "mgame/pair_tree.hpp"
#include "mgame/strategies.hpp"

namespace mgame {

// --- II side -------------------------------------------------------------

// II in the unfolded game: x-moves from a strategy of G, y-digits from a rule
// that sees the unfolded position and the chosen side.
class DigitsII : public StrategyII {
 public:
  using DigitRule = std::function<std::optional<int>(const Position&, int side)>;
  DigitsII(StrategyIIPtr x_rule, DigitRule digits, std::string label);

  std::optional<MoveII> reply(const Position& pos, const MoveI& offer) const override;
  std::string name() const override { return label_; }
  bool has_exact_delta() const override { return x_rule_->has_exact_delta(); }
  std::vector<Rational> exact_delta(const Position& pos, const Rational& r) const override {
    return x_rule_->exact_delta(pos, r);
  }
  std::optional<MoveI> witness(const Position& pos, const Rational& r, int side,
                               const Rational& v) const override {
    return x_rule_->witness(pos, r, side, v);
  }

 private:
  StrategyIIPtr x_rule_;
  DigitRule digits_;
  std::string label_;
};

// tau on the unfolded game seen as a strategy of G: y-digits are replayed
// internally and dropped from the replies.
class ProjectedII : public StrategyII {
 public:
  ProjectedII(StrategyIIPtr tau, int alphabet);
  std::optional<MoveII> reply(const Position& pos, const MoveI& offer) const override;
  std::string name() const override { return "projected(" + tau_->name() + ")"; }
  bool has_exact_delta() const override { return tau_->has_exact_delta(); }
  std::vector<Rational> exact_delta(const Position& pos, const Rational& r) const override;
  std::optional<MoveI> witness(const Position& pos, const Rational& r, int side,
                               const Rational& v) const override;

  // The unfolded run of tau paired with a G position; nullopt if tau resigns.
  std::optional<Position> unfolded(const Position& pos) const;

 private:
  StrategyIIPtr tau_;
  int alphabet_;
  mutable std::mutex memo_mu_;
  mutable std::unordered_map<std::string, std::optional<Position>> memo_;
};

std::shared_ptr<ProjectedII> project_strategy_II(StrategyIIPtr tau, int alphabet);

struct UniformTable {
  std::vector<std::string> audit;
  IIWitness tree;
  // u -> y-digits tau emitted along the canonical play reaching u.
  std::map<Node, YWord> digits;
  Rational complement;  // mu of the depth-d complement of the tree
};

// Tree of the projection of tau (stake 0, budget eps) and, for each tree
// node, the y-prefix produced on the way. Flags non-monotone entries and
// pairs incompatible with R.
UniformTable uniformize(StrategyIIPtr tau, const PairTree& r, const DyadicMeasure& mu,
                        const Rational& eps, std::size_t d);

// --- I side --------------------------------------------------------------

// Digits attached to II's moves out of the listed nodes, in order.
using RevealSchedule = std::vector<std::pair<Node, int>>;

// Replays sigma from `from` along the x-moves to `target`, attaching each
// scheduled digit to the move out of its node. nullopt when sigma resigns,
// breaks a rule, or offers 0 on the way.
std::optional<Position> follow(const StrategyI& sigma, const Position& from, const Node& target,
                               const RevealSchedule& schedule);

// Scaled measure of sigma below `from`, II playing no y-digits except
// `digit` (if given) on the first move. Values for nodes down to depth d.
std::map<Node, Rational> reveal_measure(const StrategyI& sigma, const Position& from,
                                        std::optional<int> digit, std::size_t d);

struct StabilizeResult {
  std::optional<std::string> error;
  // Kept frontier nodes at depth d and the node whose outgoing move reveals
  // the digit on their branch.
  std::map<Node, Node> reveal_at;
  Rational s_mass;
  // Frontier mass after each iteration.
  std::vector<Rational> masses;
  // Depth-d nodes of [T_{l+1}] outside [S], per iteration.
  std::vector<std::vector<Node>> outside;
  bool disjoint = true;
  std::size_t iterations = 0;
};

// `s` lists the depth-d frontier of S below from.node(). Reveals `digit` at
// the earliest node of each uncovered branch until the covered frontier mass
// exceeds (1 - beta) times that of S. The floor M(v) > eps mu(N_v) on S is
// checked first.
StabilizeResult stabilize(const StrategyI& sigma, const Position& from,
                          const std::vector<Node>& s, const Rational& eps, const Rational& beta,
                          int digit, std::size_t d);

// Nonempty words of length <= max_len over {0..k-1}, shortest first, then
// lexicographic; every proper prefix precedes the word.
std::vector<YWord> reveal_words(int k, std::size_t max_len);

struct RevealStep {
  YWord word;
  std::size_t anchors = 0;
  Rational floor;
  Rational beta;
  Rational mass_before;
  Rational mass_after;
  std::size_t pending = 0;  // frontier nodes whose reveal falls at depth d
};

struct RevealPlan {
  std::vector<YWord> words;
  std::vector<RevealStep> steps;
  // Frontier node -> word -> schedule, for the words revealed along it.
  std::map<Node, std::map<YWord, RevealSchedule>> schedules;
};

struct UnfoldResult {
  std::vector<std::string> audit;
  Rational delta;
  Rational eta;
  Rational floor_mass;  // s + delta / 2
  RevealPlan plan;
  std::vector<Node> frontier;
  // Mass of the nodes of T at each level 0..d.
  std::vector<Rational> level_mass;
  std::shared_ptr<ClosedStrategyI> strategy;
};

// sigma: I in the unfolded game at `start` (root, stake s). Prunes the
// no-digit scaled measure at eta = delta/4, then stabilizes for every word
// up to length max_len (floors eps_n = eta / 4^{n+1}, beta_n = delta / 2^{n+4}).
UnfoldResult unfold_strategy_I(const StrategyI& sigma, const Position& start,
                               std::size_t max_len, std::size_t d);

// Canonical position of an interior node u for a word: defined when every
// frontier node below u shares one schedule whose reveals all lie strictly
// above u.
std::optional<RevealSchedule> canonical_schedule(const RevealPlan& plan, const Node& u,
                                                 const YWord& word);

// Checks that every defined canonical position replays against sigma,
// that schedules of prefix words are prefixes, and reveal coherence along
// the tree to depth d.
std::vector<std::string> audit_reveals(const StrategyI& sigma, const Position& start,
                                       const UnfoldResult& r, std::size_t d);

// I in the unfolded game that plays c * mu proportionally and, right after
// II reveals `digit`, puts the whole mass of that node on its right child.
class RevealSensitiveI : public StrategyI {
 public:
  RevealSensitiveI(DyadicMeasure mu, Rational c, int digit);
  std::optional<MoveI> move(const Position& pos) const override;
  std::string name() const override;

 private:
  DyadicMeasure mu_;
  Rational c_;
  int digit_;
};

}  // namespace mgame

#endif  // MGAME_UNFOLDING_HPP_
