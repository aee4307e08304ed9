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

#include "mgame/game.hpp"

#include <stdexcept>

namespace mgame {

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::kG:
      return "G";
    case Variant::kG2:
      return "G2";
    case Variant::kUnfolded:
      return "unfolded";
  }
  return "?";
}

Variant parse_variant(const std::string& s) {
  if (s == "G") return Variant::kG;
  if (s == "G2") return Variant::kG2;
  if (s == "unfolded") return Variant::kUnfolded;
  throw std::invalid_argument("unknown game variant: " + s);
}

Rational MoveI::total() const {
  Rational t;
  for (const Rational& m : masses) t += m;
  return t;
}

namespace {
void check_stake(const Rational& s) {
  if (s.sign() < 0 || s >= Rational(1)) throw std::invalid_argument("stake must lie in [0, 1)");
}
}  // namespace

Position Position::start_g(const Rational& stake, const DyadicMeasure& mu) {
  check_stake(stake);
  Position p;
  p.variant_ = Variant::kG;
  p.stake_ = stake;
  p.mu_ = mu;
  return p;
}

Position Position::start_g2(const Rational& stake, const DyadicMeasure& first,
                            const DyadicMeasure& second) {
  Position p = start_g(stake, first);
  p.variant_ = Variant::kG2;
  p.mu2_ = second;
  return p;
}

Position Position::start_unfolded(const Rational& stake, const DyadicMeasure& mu,
                                  int alphabet) {
  if (alphabet < 1 || alphabet > 10) throw std::invalid_argument("y-alphabet size must be in [1, 10]");
  Position p = start_g(stake, mu);
  p.variant_ = Variant::kUnfolded;
  p.alphabet_ = alphabet;
  return p;
}

Node Position::payoff_node() const {
  return variant_ == Variant::kG2 ? interleave(pair_) : node_;
}

Rational Position::cell_measure() const {
  if (variant_ == Variant::kG2) return mu_.mass(pair_.first) * mu2_.mass(pair_.second);
  return mu_.mass(node_);
}

Rational Position::child_measure(int side) const {
  if (variant_ == Variant::kG2) {
    const PairNode c = pair_.child(side);
    return mu_.mass(c.first) * mu2_.mass(c.second);
  }
  return mu_.mass(node_.child(side));
}

std::size_t Position::rounds_since_y() const {
  return y_rounds_.empty() ? history_.size() : history_.size() - 1 - y_rounds_.back();
}

Position Position::after(const MoveI& offer, const MoveII& reply) const {
  Position p = *this;
  p.history_.push_back({offer, reply});
  if (variant_ == Variant::kG2) {
    p.pair_ = pair_.child(reply.side);
  } else {
    p.node_ = node_.child(reply.side);
  }
  p.mass_ = offer.masses.at(static_cast<std::size_t>(reply.side));
  if (reply.y) {
    p.y_.push_back(*reply.y);
    p.y_rounds_.push_back(history_.size());
  }
  return p;
}

Position Position::prefix(std::size_t n) const {
  Position p = *this;
  p.history_.clear();
  p.node_ = Node();
  p.pair_ = PairNode();
  p.mass_ = 1;
  p.y_.clear();
  p.y_rounds_.clear();
  for (std::size_t i = 0; i < n && i < history_.size(); ++i) {
    p = p.after(history_[i].offer, history_[i].reply);
  }
  return p;
}

std::string Position::key() const {
  std::string k;
  for (const Round& r : history_) {
    for (const Rational& m : r.offer.masses) {
      k += m.str();
      k += ',';
    }
    k += '>';
    k += static_cast<char>('0' + r.reply.side);
    if (r.reply.y) {
      k += 'y';
      k += std::to_string(*r.reply.y);
    }
    k += ';';
  }
  return k;
}

std::optional<RuleViolation> validate_move(const Position& pos, const MoveI& offer) {
  const int n = pos.arity();
  if (static_cast<int>(offer.masses.size()) != n) {
    return RuleViolation{"arity", "expected " + std::to_string(n) + " masses, got " +
                                      std::to_string(offer.masses.size())};
  }
  for (int q = 0; q < n; ++q) {
    const Rational& m = offer.masses[q];
    const Rational cap = pos.child_measure(q);
    const std::string where = "cell " + std::to_string(q) + ": m = " + m.str();
    if (m.sign() < 0) return RuleViolation{"nonnegative", where};
    if (m > cap) return RuleViolation{"dominated", where + " > mu = " + cap.str()};
    if (cap.sign() > 0 && m == cap) {
      return RuleViolation{"strict_below_cell", where + " equals mu(N) = " + cap.str()};
    }
  }
  const Rational total = offer.total();
  if (pos.at_root()) {
    if (total <= pos.stake()) {
      return RuleViolation{"first_sum_exceeds_stake",
                           "sum " + total.str() + " <= stake " + pos.stake().str()};
    }
  } else if (total != pos.mass()) {
    return RuleViolation{"additive", "sum " + total.str() + " != parent " + pos.mass().str()};
  }
  return std::nullopt;
}

std::optional<RuleViolation> validate_move(const Position& pos, const MoveI& offer,
                                           const MoveII& reply) {
  if (reply.side < 0 || reply.side >= pos.arity()) {
    return RuleViolation{"side_range", "side " + std::to_string(reply.side)};
  }
  if (static_cast<std::size_t>(reply.side) >= offer.masses.size() ||
      offer.masses[reply.side].is_zero()) {
    return RuleViolation{"side_nonzero", "side " + std::to_string(reply.side) + " has mass 0"};
  }
  if (reply.y) {
    if (pos.variant() != Variant::kUnfolded) {
      return RuleViolation{"y_not_allowed", "y-digit outside the unfolded game"};
    }
    if (*reply.y < 0 || *reply.y >= pos.alphabet()) {
      return RuleViolation{"y_alphabet", "digit " + std::to_string(*reply.y) + " not in [0, " +
                                             std::to_string(pos.alphabet()) + ")"};
    }
  }
  return std::nullopt;
}

}  // namespace mgame
