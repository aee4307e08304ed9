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

#include "mgame/referee.hpp"

#include <stdexcept>

namespace mgame {

Cover Payoff::classify(const Position& pos) const {
  if (tree_) return tree_->classify(pos.node(), pos.y_digits());
  return set_.classify(pos.payoff_node());
}

std::string Payoff::describe() const {
  return tree_ ? tree_->describe() : set_.describe();
}

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::kIDecided:
      return "I-decided";
    case Outcome::kIIDecided:
      return "II-decided";
    case Outcome::kUndecided:
      return "undecided";
  }
  return "?";
}

Outcome parse_outcome(const std::string& s) {
  if (s == "I-decided") return Outcome::kIDecided;
  if (s == "II-decided") return Outcome::kIIDecided;
  if (s == "undecided") return Outcome::kUndecided;
  throw std::invalid_argument("unknown outcome: " + s);
}

Position Trace::final_position() const {
  Position p = start;
  for (const Round& r : moves) p = p.after(r.offer, r.reply);
  return p;
}

namespace {

// Shared driver: `next` supplies the round to play at a position, or
// reports a resignation through `resigned`.
template <class Next>
void run(Trace& t, Next next) {
  Position pos = t.start;
  t.moves.clear();
  t.audit.clear();
  t.violation.reset();
  t.rejected_offer.reset();
  t.rejected_reply.reset();
  t.outcome = Outcome::kUndecided;
  for (;;) {
    const Cover c = t.payoff.classify(pos);
    if (c != Cover::kMixed) {
      t.outcome = c == Cover::kInside ? Outcome::kIIDecided : Outcome::kIDecided;
      break;
    }
    if (pos.round() >= t.depth_limit) break;
    std::optional<MoveI> offer;
    std::optional<MoveII> reply;
    bool more = next(pos, offer, reply);
    if (!more) break;
    AuditEntry entry{pos.round(), true, "", ""};
    if (!offer) {
      entry = {pos.round(), false, "I:resign", "no move"};
    } else if (auto v = validate_move(pos, *offer)) {
      entry = {pos.round(), false, "I:" + v->rule, v->detail};
    } else if (!reply) {
      entry = {pos.round(), false, "II:resign", "no move"};
    } else if (auto w = validate_move(pos, *offer, *reply)) {
      entry = {pos.round(), false, "II:" + w->rule, w->detail};
    }
    t.audit.push_back(entry);
    if (!entry.ok) {
      t.rejected_offer = offer;
      t.rejected_reply = reply;
      t.violation = entry.rule;
      t.outcome = entry.rule.rfind("I:", 0) == 0 ? Outcome::kIIDecided : Outcome::kIDecided;
      break;
    }
    t.moves.push_back({*offer, *reply});
    pos = pos.after(*offer, *reply);
  }
  t.final_depth = pos.round();
  t.rounds_since_y = pos.rounds_since_y();
}

}  // namespace

Trace referee(const StrategyI& first, const StrategyII& second, const Position& start,
              const Payoff& payoff, std::size_t d) {
  Trace t;
  t.start = start;
  t.payoff = payoff;
  t.strategy_i = first.name();
  t.strategy_ii = second.name();
  t.depth_limit = d;
  run(t, [&](const Position& pos, std::optional<MoveI>& offer, std::optional<MoveII>& reply) {
    offer = first.move(pos);
    if (offer && !validate_move(pos, *offer)) reply = second.reply(pos, *offer);
    return true;
  });
  return t;
}

Trace replay(const Trace& trace) {
  Trace t = trace;
  std::size_t i = 0;
  run(t, [&](const Position&, std::optional<MoveI>& offer, std::optional<MoveII>& reply) {
    if (i < trace.moves.size()) {
      offer = trace.moves[i].offer;
      reply = trace.moves[i].reply;
    } else if (i == trace.moves.size() && trace.violation) {
      offer = trace.rejected_offer;
      reply = trace.rejected_reply;
    } else {
      return false;
    }
    ++i;
    return true;
  });
  return t;
}

bool replay_matches(const Trace& trace) {
  const Trace r = replay(trace);
  return r.audit == trace.audit && r.outcome == trace.outcome &&
         r.final_depth == trace.final_depth && r.violation == trace.violation &&
         r.moves == trace.moves;
}

}  // namespace mgame
