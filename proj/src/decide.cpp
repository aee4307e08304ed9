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

#include "mgame/decide.hpp"

#include <map>
#include <stdexcept>

namespace mgame {

Decision decide_by_measure(const DyadicMeasure& mu, const SetExpr& a, const Rational& s,
                           std::optional<std::size_t> depth) {
  if (!a.as_clopen()) throw std::invalid_argument("decide needs a clopen payoff");
  const Clopen comp = ~*a.as_clopen();
  const std::size_t d = depth.value_or(std::max<std::size_t>(1, a.as_clopen()->depth()));
  Decision out;
  out.complement_mass = comp.mass(mu);
  const SetExpr comp_set = SetExpr::clopen(comp);
  const Position start = Position::start_g(s, mu);
  if (out.complement_mass > s) {
    out.winner = Certificate::Player::kI;
    // Half the available slack: (1 - eps) mu(F) > s iff eps < 1 - s / mu(F).
    const Rational eps = (Rational(1) - s / out.complement_mass) / Rational(2);
    out.strategy_i = strategy_I_from_closed(mu, comp_set, s, eps);
    out.certificate.player = Certificate::Player::kI;
    out.certificate.i_witness = extract_scaled_measure(*out.strategy_i, start, d);
  } else {
    out.winner = Certificate::Player::kII;
    out.strategy_ii = strategy_II_from_open(mu, comp_set, s);
    out.certificate.player = Certificate::Player::kII;
    out.certificate.ii_witness =
        extract_tree(*out.strategy_ii, start, (Rational(1) - s) / Rational(2), d);
  }
  return out;
}

namespace {

struct GridSolver {
  const DyadicMeasure& mu;
  Clopen a;
  int q;
  std::size_t d;
  std::map<std::pair<Node, Rational>, bool> memo;

  // Whether I forces a win once II has reached `t` with mass m > 0.
  bool i_wins(const Node& t, const Rational& m) {
    const Cover c = a.classify(t);
    if (c == Cover::kInside) return false;
    if (c == Cover::kOutside) return true;
    if (t.size() >= d) return false;
    auto key = std::make_pair(t, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool win = false;
    const Rational cap0 = mu.mass(t.child(0)), cap1 = mu.mass(t.child(1));
    for (int j = 0; j <= q && !win; ++j) {
      const Rational m0 = m * Rational(j, q), m1 = m - m0;
      if (!legal(m0, cap0) || !legal(m1, cap1)) continue;
      win = (m0.is_zero() || i_wins(t.child(0), m0)) && (m1.is_zero() || i_wins(t.child(1), m1));
    }
    memo.emplace(std::move(key), win);
    return win;
  }

  static bool legal(const Rational& m, const Rational& cap) {
    return m.sign() >= 0 && (cap.is_zero() ? m.is_zero() : m < cap);
  }
};

}  // namespace

GridResult grid_minimax(const DyadicMeasure& mu, const SetExpr& a, const Rational& s, int q,
                        std::size_t d) {
  if (!a.as_clopen()) throw std::invalid_argument("grid minimax needs a clopen payoff");
  if (q < 2) throw std::invalid_argument("Q must be at least 2");
  GridSolver solver{mu, *a.as_clopen(), q, d, {}};
  GridResult out;
  const Rational comp = (~*a.as_clopen()).mass(mu);
  out.resolution_limited = (comp - s).abs() <= Rational(2, q);
  const Rational cap0 = mu.mass(Node("0")), cap1 = mu.mass(Node("1"));
  const Cover root = solver.a.classify(Node());
  if (root != Cover::kMixed) {
    out.i_wins = root == Cover::kOutside;
    return out;
  }
  for (int j0 = 0; j0 <= q; ++j0) {
    const Rational m0(j0, q);
    if (!GridSolver::legal(m0, cap0)) continue;
    if (!m0.is_zero() && !solver.i_wins(Node("0"), m0)) continue;
    for (int j1 = 0; j1 <= q; ++j1) {
      const Rational m1(j1, q);
      if (!GridSolver::legal(m1, cap1) || !(m0 + m1 > s)) continue;
      if (!m1.is_zero() && !solver.i_wins(Node("1"), m1)) continue;
      out.i_wins = true;
      out.value = max(out.value, m0 + m1);
    }
  }
  out.states = solver.memo.size();
  return out;
}

}  // namespace mgame
