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

#include "mgame/io.hpp"

#include <fstream>
#include <sstream>

namespace mgame {

namespace {

std::string sub(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) throw JsonError(path, "expected an array");
  return j;
}

std::string string_from(const Json& j, const std::string& path) {
  if (!j.is_string()) throw JsonError(path, "expected a string");
  return j.get<std::string>();
}

std::size_t size_from(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw JsonError(path, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

int int_from(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw JsonError(path, "expected an integer");
  return j.get<int>();
}

bool bool_from(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw JsonError(path, "expected a boolean");
  return j.get<bool>();
}

template <class F>
auto wrap(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const JsonError&) {
    throw;
  } catch (const std::exception& e) {
    throw JsonError(path, e.what());
  }
}

Json nodes_json(const std::vector<Node>& nodes) {
  Json a = Json::array();
  for (const Node& t : nodes) a.push_back(t.str());
  return a;
}

Json rationals_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const Rational& r : v) a.push_back(to_json(r));
  return a;
}

std::vector<Rational> rationals_from(const Json& j, const std::string& path) {
  std::vector<Rational> out;
  const Json& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(rational_from(a[i], at(path, i)));
  return out;
}

Json strings_json(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

std::vector<std::string> strings_from(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  const Json& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(string_from(a[i], at(path, i)));
  return out;
}

Json node_values_json(const std::map<Node, Rational>& m) {
  Json o = Json::object();
  for (const auto& [t, v] : m) o[t.str()] = to_json(v);
  return o;
}

std::map<Node, Rational> node_values_from(const Json& j, const std::string& path) {
  if (!j.is_object()) throw JsonError(path, "expected an object");
  std::map<Node, Rational> out;
  for (const auto& [k, v] : j.items()) {
    const std::string p = sub(path, "\"" + k + "\"");
    out[wrap(p, [&] { return Node(k); })] = rational_from(v, p);
  }
  return out;
}

}  // namespace

Json document(std::string_view kind, const Json& body) {
  Json j = Json::object();
  j["format"] = "mgame." + std::string(kind) + "/1";
  for (const auto& [k, v] : body.items()) j[k] = v;
  return j;
}

void expect_document(const Json& j, std::string_view kind) {
  const std::string want = "mgame." + std::string(kind) + "/1";
  if (!j.is_object() || !j.contains("format")) throw JsonError("$", "missing \"format\"");
  if (!j["format"].is_string() || j["format"].get<std::string>() != want) {
    throw JsonError("$.format", "expected \"" + want + "\", got " + j["format"].dump());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw JsonError(source, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw JsonError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw JsonError(path, "cannot write file");
  out << dump(j);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw JsonError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw JsonError(sub(path, key), "missing");
  return *it;
}

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from(const Json& j, const std::string& path) {
  const std::string s = string_from(j, path);
  return wrap(path, [&] { return Rational::parse(s); });
}

Json to_json(const Node& t) { return t.str(); }

Node node_from(const Json& j, const std::string& path) {
  const std::string s = string_from(j, path);
  return wrap(path, [&] { return Node(s); });
}

std::vector<Node> nodes_from(const Json& j, const std::string& path) {
  std::vector<Node> out;
  const Json& a = array_at(j, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(node_from(a[i], at(path, i)));
  return out;
}

Json to_json(const DyadicMeasure& mu) {
  Json j = Json::object();
  switch (mu.kind()) {
    case DyadicMeasure::Kind::kFair:
      j["kind"] = "fair";
      break;
    case DyadicMeasure::Kind::kBernoulli:
      j["kind"] = "bernoulli";
      j["p"] = to_json(mu.bernoulli_p());
      break;
    case DyadicMeasure::Kind::kAtoms: {
      j["kind"] = "atoms";
      Json a = Json::array();
      for (const Atom& x : mu.atom_list()) {
        a.push_back(
            Json{{"prefix", x.prefix.str()}, {"cycle", x.cycle.str()}, {"weight", to_json(x.weight)}});
      }
      j["atoms"] = a;
      break;
    }
    case DyadicMeasure::Kind::kExplicit:
      j["kind"] = "explicit";
      j["depth"] = mu.table_depth();
      j["weights"] = rationals_json(mu.table());
      j["tail_p"] = to_json(mu.product_p());
      break;
  }
  return j;
}

DyadicMeasure measure_from(const Json& j, const std::string& path) {
  const std::string kind = string_from(field(j, "kind", path), sub(path, "kind"));
  return wrap(path, [&]() -> DyadicMeasure {
    if (kind == "fair") return DyadicMeasure::fair();
    if (kind == "bernoulli") {
      return DyadicMeasure::bernoulli(rational_from(field(j, "p", path), sub(path, "p")));
    }
    if (kind == "atoms") {
      std::vector<Atom> atoms;
      const std::string ap = sub(path, "atoms");
      const Json& a = array_at(field(j, "atoms", path), ap);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string p = at(ap, i);
        atoms.push_back(Atom{node_from(field(a[i], "prefix", p), sub(p, "prefix")),
                             node_from(field(a[i], "cycle", p), sub(p, "cycle")),
                             rational_from(field(a[i], "weight", p), sub(p, "weight"))});
      }
      return DyadicMeasure::atoms(std::move(atoms));
    }
    if (kind == "explicit") {
      return DyadicMeasure::explicit_table(
          size_from(field(j, "depth", path), sub(path, "depth")),
          rationals_from(field(j, "weights", path), sub(path, "weights")),
          rational_from(field(j, "tail_p", path), sub(path, "tail_p")));
    }
    throw JsonError(sub(path, "kind"), "unknown measure kind \"" + kind + "\"");
  });
}

Json to_json(const ProductMeasure& mu) {
  return Json{{"first", to_json(mu.first)}, {"second", to_json(mu.second)}};
}

ProductMeasure product_measure_from(const Json& j, const std::string& path) {
  return ProductMeasure{measure_from(field(j, "first", path), sub(path, "first")),
                        measure_from(field(j, "second", path), sub(path, "second"))};
}

Json to_json(const Clopen& c) { return nodes_json(c.antichain()); }

Clopen clopen_from(const Json& j, const std::string& path) {
  return Clopen::from_nodes(nodes_from(j, path));
}

Json to_json(const EventFamily& f) {
  Json j = Json::object();
  switch (f.kind()) {
    case EventFamily::Kind::kList: {
      j["kind"] = "list";
      Json a = Json::array();
      for (const auto& ev : f.antichains()) a.push_back(nodes_json(ev));
      j["events"] = a;
      break;
    }
    case EventFamily::Kind::kCoordinate:
      j["kind"] = "coordinate";
      j["bit"] = f.coordinate_bit();
      break;
    case EventFamily::Kind::kConstant:
      j["kind"] = "constant";
      j["event"] = nodes_json(f.antichains().front());
      break;
  }
  return j;
}

EventFamily family_from(const Json& j, const std::string& path) {
  const std::string kind = string_from(field(j, "kind", path), sub(path, "kind"));
  return wrap(path, [&]() -> EventFamily {
    if (kind == "list") {
      std::vector<std::vector<Node>> evs;
      const std::string ep = sub(path, "events");
      const Json& a = array_at(field(j, "events", path), ep);
      for (std::size_t i = 0; i < a.size(); ++i) evs.push_back(nodes_from(a[i], at(ep, i)));
      return EventFamily::list(std::move(evs));
    }
    if (kind == "coordinate") {
      return EventFamily::coordinate(int_from(field(j, "bit", path), sub(path, "bit")));
    }
    if (kind == "constant") {
      return EventFamily::constant(nodes_from(field(j, "event", path), sub(path, "event")));
    }
    throw JsonError(sub(path, "kind"), "unknown family kind \"" + kind + "\"");
  });
}

Json to_json(const SetExpr& s) {
  Json j = Json::object();
  switch (s.kind()) {
    case SetExpr::Kind::kClopen:
      j["kind"] = "clopen";
      j["antichain"] = nodes_json(s.nodes());
      break;
    case SetExpr::Kind::kClosedTree:
      if (s.builtin() == SetExpr::Builtin::kSubstring) {
        j["kind"] = "avoid_substring";
        j["pattern"] = s.pattern().str();
      } else {
        j["kind"] = "closed_tree";
        j["leaves"] = nodes_json(s.nodes());
      }
      break;
    case SetExpr::Kind::kOpenUnion:
      if (s.builtin() == SetExpr::Builtin::kSubstring) {
        j["kind"] = "contains_substring";
        j["pattern"] = s.pattern().str();
      } else {
        j["kind"] = "open_union";
        j["nodes"] = nodes_json(s.nodes());
      }
      break;
    case SetExpr::Kind::kLimSup:
      j["kind"] = "limsup";
      j["family"] = to_json(s.family());
      j["horizon"] = s.horizon();
      break;
    case SetExpr::Kind::kIntersection:
    case SetExpr::Kind::kUnion: {
      j["kind"] = s.kind() == SetExpr::Kind::kUnion ? "union" : "intersection";
      Json a = Json::array();
      for (const SetExpr& x : s.args()) a.push_back(to_json(x));
      j["args"] = a;
      break;
    }
    case SetExpr::Kind::kComplement:
      j["kind"] = "complement";
      j["arg"] = to_json(s.args().front());
      break;
  }
  return j;
}

SetExpr set_from(const Json& j, const std::string& path) {
  const std::string kind = string_from(field(j, "kind", path), sub(path, "kind"));
  auto args = [&]() {
    std::vector<SetExpr> out;
    const std::string ap = sub(path, "args");
    const Json& a = array_at(field(j, "args", path), ap);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(set_from(a[i], at(ap, i)));
    return out;
  };
  return wrap(path, [&]() -> SetExpr {
    if (kind == "clopen") {
      return SetExpr::clopen(nodes_from(field(j, "antichain", path), sub(path, "antichain")));
    }
    if (kind == "closed_tree") {
      return SetExpr::closed_tree(nodes_from(field(j, "leaves", path), sub(path, "leaves")));
    }
    if (kind == "avoid_substring") {
      return SetExpr::avoid_substring(node_from(field(j, "pattern", path), sub(path, "pattern")));
    }
    if (kind == "open_union") {
      return SetExpr::open_union(nodes_from(field(j, "nodes", path), sub(path, "nodes")));
    }
    if (kind == "contains_substring") {
      return SetExpr::contains_substring(
          node_from(field(j, "pattern", path), sub(path, "pattern")));
    }
    if (kind == "limsup") {
      return SetExpr::limsup(family_from(field(j, "family", path), sub(path, "family")),
                             size_from(field(j, "horizon", path), sub(path, "horizon")));
    }
    if (kind == "intersection") return SetExpr::intersection(args());
    if (kind == "union") return SetExpr::unite(args());
    if (kind == "complement") {
      return SetExpr::complement(set_from(field(j, "arg", path), sub(path, "arg")));
    }
    throw JsonError(sub(path, "kind"), "unknown set kind \"" + kind + "\"");
  });
}

Json to_json(const PairTree& t) {
  Json j = Json::object();
  switch (t.kind()) {
    case PairTree::Kind::kFull:
      j["kind"] = "full";
      break;
    case PairTree::Kind::kEmpty:
      j["kind"] = "empty";
      break;
    case PairTree::Kind::kXClopen:
      j["kind"] = "x_clopen";
      j["antichain"] = nodes_json(t.antichain());
      break;
    case PairTree::Kind::kFirstDigitMatch:
      j["kind"] = "first_digit_match";
      break;
    case PairTree::Kind::kForbidden: {
      j["kind"] = "forbidden";
      Json a = Json::array();
      for (const auto& [u, v] : t.rects()) a.push_back(Json{{"x", u.str()}, {"y", yword_str(v)}});
      j["rects"] = a;
      break;
    }
  }
  j["k"] = t.alphabet();
  return j;
}

PairTree pair_tree_from(const Json& j, const std::string& path) {
  const std::string kind = string_from(field(j, "kind", path), sub(path, "kind"));
  const int k = int_from(field(j, "k", path), sub(path, "k"));
  return wrap(path, [&]() -> PairTree {
    if (kind == "full") return PairTree::full(k);
    if (kind == "empty") return PairTree::empty(k);
    if (kind == "x_clopen") {
      return PairTree::x_clopen(nodes_from(field(j, "antichain", path), sub(path, "antichain")),
                                k);
    }
    if (kind == "first_digit_match") return PairTree::first_digit_match(k);
    if (kind == "forbidden") {
      std::vector<std::pair<Node, YWord>> rects;
      const std::string rp = sub(path, "rects");
      const Json& a = array_at(field(j, "rects", path), rp);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string p = at(rp, i);
        const std::string y = string_from(field(a[i], "y", p), sub(p, "y"));
        rects.emplace_back(node_from(field(a[i], "x", p), sub(p, "x")),
                           wrap(sub(p, "y"), [&] { return parse_yword(y); }));
      }
      return PairTree::forbidden(std::move(rects), k);
    }
    throw JsonError(sub(path, "kind"), "unknown pair tree kind \"" + kind + "\"");
  });
}

Json to_json(const Payoff& p) {
  if (p.is_pairs()) return Json{{"pairs", to_json(p.pairs())}};
  return Json{{"set", to_json(p.set())}};
}

Payoff payoff_from(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("pairs")) {
    return Payoff::of_pairs(pair_tree_from(j["pairs"], sub(path, "pairs")));
  }
  return Payoff::of_set(set_from(field(j, "set", path), sub(path, "set")));
}

Json to_json(const MoveI& m) { return rationals_json(m.masses); }

MoveI move_i_from(const Json& j, const std::string& path) {
  return MoveI{rationals_from(j, path)};
}

Json to_json(const MoveII& m) {
  Json j = Json{{"side", m.side}};
  if (m.y) j["y"] = *m.y;
  return j;
}

MoveII move_ii_from(const Json& j, const std::string& path) {
  MoveII m;
  m.side = int_from(field(j, "side", path), sub(path, "side"));
  if (j.contains("y")) m.y = int_from(j["y"], sub(path, "y"));
  return m;
}

Json to_json(const Round& r) {
  return Json{{"offer", to_json(r.offer)}, {"reply", to_json(r.reply)}};
}

Round round_from(const Json& j, const std::string& path) {
  return Round{move_i_from(field(j, "offer", path), sub(path, "offer")),
               move_ii_from(field(j, "reply", path), sub(path, "reply"))};
}

Json start_json(const Position& p) {
  Json j = Json{{"variant", variant_name(p.variant())}, {"stake", to_json(p.stake())},
                {"measure", to_json(p.measure())}};
  if (p.variant() == Variant::kG2) j["second_measure"] = to_json(p.second_measure());
  if (p.variant() == Variant::kUnfolded) j["alphabet"] = p.alphabet();
  return j;
}

Position start_from(const Json& j, const std::string& path) {
  const std::string v = string_from(field(j, "variant", path), sub(path, "variant"));
  const Variant variant = wrap(sub(path, "variant"), [&] { return parse_variant(v); });
  const Rational stake = rational_from(field(j, "stake", path), sub(path, "stake"));
  if (stake.sign() < 0 || stake >= Rational(1)) {
    throw JsonError(sub(path, "stake"), "stake must lie in [0, 1)");
  }
  const DyadicMeasure mu = measure_from(field(j, "measure", path), sub(path, "measure"));
  switch (variant) {
    case Variant::kG:
      return Position::start_g(stake, mu);
    case Variant::kG2:
      return Position::start_g2(
          stake, mu, measure_from(field(j, "second_measure", path), sub(path, "second_measure")));
    case Variant::kUnfolded:
      return Position::start_unfolded(stake, mu,
                                      int_from(field(j, "alphabet", path), sub(path, "alphabet")));
  }
  throw JsonError(path, "unreachable variant");
}

Json to_json(const Trace& t) {
  Json moves = Json::array();
  for (const Round& r : t.moves) moves.push_back(to_json(r));
  Json audit = Json::array();
  for (const AuditEntry& e : t.audit) {
    Json a = Json{{"round", e.round}, {"ok", e.ok}};
    if (!e.ok) {
      a["rule"] = e.rule;
      a["detail"] = e.detail;
    }
    audit.push_back(a);
  }
  Json body = Json{{"start", start_json(t.start)},
                   {"payoff", to_json(t.payoff)},
                   {"strategy_i", t.strategy_i},
                   {"strategy_ii", t.strategy_ii},
                   {"depth_limit", t.depth_limit},
                   {"moves", moves},
                   {"audit", audit},
                   {"outcome", outcome_name(t.outcome)},
                   {"final_depth", t.final_depth}};
  if (t.violation) body["violation"] = *t.violation;
  if (t.rejected_offer) body["rejected_offer"] = to_json(*t.rejected_offer);
  if (t.rejected_reply) body["rejected_reply"] = to_json(*t.rejected_reply);
  body["rounds_since_y"] = t.rounds_since_y;
  body["certificates"] = strings_json(t.certificates);
  return document("trace", body);
}

Trace trace_from(const Json& j, const std::string& path) {
  expect_document(j, "trace");
  Trace t;
  t.start = start_from(field(j, "start", path), sub(path, "start"));
  t.payoff = payoff_from(field(j, "payoff", path), sub(path, "payoff"));
  t.strategy_i = string_from(field(j, "strategy_i", path), sub(path, "strategy_i"));
  t.strategy_ii = string_from(field(j, "strategy_ii", path), sub(path, "strategy_ii"));
  t.depth_limit = size_from(field(j, "depth_limit", path), sub(path, "depth_limit"));
  const std::string mp = sub(path, "moves");
  const Json& moves = array_at(field(j, "moves", path), mp);
  for (std::size_t i = 0; i < moves.size(); ++i) t.moves.push_back(round_from(moves[i], at(mp, i)));
  const std::string ap = sub(path, "audit");
  const Json& audit = array_at(field(j, "audit", path), ap);
  for (std::size_t i = 0; i < audit.size(); ++i) {
    const std::string p = at(ap, i);
    AuditEntry e;
    e.round = size_from(field(audit[i], "round", p), sub(p, "round"));
    e.ok = bool_from(field(audit[i], "ok", p), sub(p, "ok"));
    if (!e.ok) {
      e.rule = string_from(field(audit[i], "rule", p), sub(p, "rule"));
      e.detail = string_from(field(audit[i], "detail", p), sub(p, "detail"));
    }
    t.audit.push_back(std::move(e));
  }
  const std::string oc = string_from(field(j, "outcome", path), sub(path, "outcome"));
  t.outcome = wrap(sub(path, "outcome"), [&] { return parse_outcome(oc); });
  t.final_depth = size_from(field(j, "final_depth", path), sub(path, "final_depth"));
  if (j.contains("violation")) t.violation = string_from(j["violation"], sub(path, "violation"));
  if (j.contains("rejected_offer")) {
    t.rejected_offer = move_i_from(j["rejected_offer"], sub(path, "rejected_offer"));
  }
  if (j.contains("rejected_reply")) {
    t.rejected_reply = move_ii_from(j["rejected_reply"], sub(path, "rejected_reply"));
  }
  t.rounds_since_y = size_from(field(j, "rounds_since_y", path), sub(path, "rounds_since_y"));
  t.certificates = strings_from(field(j, "certificates", path), sub(path, "certificates"));
  return t;
}

Json to_json(const IWitness& w) {
  Json j = Json{{"stake", to_json(w.stake)}, {"depth", w.depth}, {"values", node_values_json(w.values)}};
  if (w.aborted) j["aborted"] = *w.aborted;
  return j;
}

IWitness i_witness_from(const Json& j, const std::string& path) {
  IWitness w;
  w.stake = rational_from(field(j, "stake", path), sub(path, "stake"));
  w.depth = size_from(field(j, "depth", path), sub(path, "depth"));
  w.values = node_values_from(field(j, "values", path), sub(path, "values"));
  if (j.contains("aborted")) w.aborted = string_from(j["aborted"], sub(path, "aborted"));
  return w;
}

Json to_json(const IIWitness& w) {
  Json plays = Json::object();
  for (const auto& [u, rounds] : w.plays) {
    Json a = Json::array();
    for (const Round& r : rounds) a.push_back(to_json(r));
    plays[u.str()] = a;
  }
  return Json{{"stake", to_json(w.stake)}, {"eps", to_json(w.eps)},
              {"depth", w.depth},          {"values", node_values_json(w.values)},
              {"plays", plays},            {"approximate", w.approximate},
              {"slack", to_json(w.slack)}};
}

IIWitness ii_witness_from(const Json& j, const std::string& path) {
  IIWitness w;
  w.stake = rational_from(field(j, "stake", path), sub(path, "stake"));
  w.eps = rational_from(field(j, "eps", path), sub(path, "eps"));
  w.depth = size_from(field(j, "depth", path), sub(path, "depth"));
  w.values = node_values_from(field(j, "values", path), sub(path, "values"));
  const std::string pp = sub(path, "plays");
  const Json& plays = field(j, "plays", path);
  if (!plays.is_object()) throw JsonError(pp, "expected an object");
  for (const auto& [k, v] : plays.items()) {
    const std::string p = sub(pp, "\"" + k + "\"");
    std::vector<Round> rounds;
    const Json& a = array_at(v, p);
    for (std::size_t i = 0; i < a.size(); ++i) rounds.push_back(round_from(a[i], at(p, i)));
    w.plays[wrap(p, [&] { return Node(k); })] = std::move(rounds);
  }
  w.approximate = bool_from(field(j, "approximate", path), sub(path, "approximate"));
  w.slack = rational_from(field(j, "slack", path), sub(path, "slack"));
  return w;
}

Json to_json(const Certificate& c) {
  Json body = Json{{"player", c.player == Certificate::Player::kI ? "I" : "II"}};
  if (c.i_witness) body["i_witness"] = to_json(*c.i_witness);
  if (c.ii_witness) body["ii_witness"] = to_json(*c.ii_witness);
  return document("certificate", body);
}

Certificate certificate_from(const Json& j, const std::string& path) {
  expect_document(j, "certificate");
  Certificate c;
  const std::string pl = string_from(field(j, "player", path), sub(path, "player"));
  if (pl == "I") {
    c.player = Certificate::Player::kI;
  } else if (pl == "II") {
    c.player = Certificate::Player::kII;
  } else {
    throw JsonError(sub(path, "player"), "expected \"I\" or \"II\"");
  }
  if (j.contains("i_witness")) c.i_witness = i_witness_from(j["i_witness"], sub(path, "i_witness"));
  if (j.contains("ii_witness")) {
    c.ii_witness = ii_witness_from(j["ii_witness"], sub(path, "ii_witness"));
  }
  return c;
}

Json to_json(const BlockSchedule& s) {
  Json blocks = Json::array();
  for (const Block& b : s.blocks) {
    blocks.push_back(Json{{"first", b.first},
                          {"last", b.last},
                          {"tolerance", to_json(b.tolerance)},
                          {"product", to_json(b.product)}});
  }
  return document("block_schedule", Json{{"blocks", blocks}, {"partial", s.partial}});
}

BlockSchedule schedule_from(const Json& j, const std::string& path) {
  expect_document(j, "block_schedule");
  BlockSchedule s;
  const std::string bp = sub(path, "blocks");
  const Json& a = array_at(field(j, "blocks", path), bp);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::string p = at(bp, i);
    s.blocks.push_back(Block{size_from(field(a[i], "first", p), sub(p, "first")),
                             size_from(field(a[i], "last", p), sub(p, "last")),
                             rational_from(field(a[i], "tolerance", p), sub(p, "tolerance")),
                             rational_from(field(a[i], "product", p), sub(p, "product"))});
  }
  s.partial = bool_from(field(j, "partial", path), sub(path, "partial"));
  return s;
}

Json to_json(const UniformTable& t) {
  Json digits = Json::object();
  for (const auto& [u, y] : t.digits) digits[u.str()] = yword_str(y);
  return document("uniform_table", Json{{"digits", digits},
                                        {"complement", to_json(t.complement)},
                                        {"audit", strings_json(t.audit)}});
}

std::map<Node, YWord> uniform_digits_from(const Json& j, const std::string& path) {
  expect_document(j, "uniform_table");
  const std::string dp = sub(path, "digits");
  const Json& d = field(j, "digits", path);
  if (!d.is_object()) throw JsonError(dp, "expected an object");
  std::map<Node, YWord> out;
  for (const auto& [k, v] : d.items()) {
    const std::string p = sub(dp, "\"" + k + "\"");
    const std::string y = string_from(v, p);
    out[wrap(p, [&] { return Node(k); })] = wrap(p, [&] { return parse_yword(y); });
  }
  return out;
}

Json to_json(const Surrogate& s) {
  return Json{{"defined", s.defined},       {"ratio", to_json(s.ratio)},
              {"at", s.at},                 {"gap", to_json(s.gap)},
              {"inha", to_json(s.inha)},    {"divergence", to_json(s.divergence)}};
}

Json to_json(const RLState& s) {
  Json rounds = Json::array();
  for (const RLRound& r : s.rounds) {
    rounds.push_back(Json{{"round", r.round},
                          {"chosen", r.chosen},
                          {"played", r.played},
                          {"forced", r.forced},
                          {"chosen_mass", to_json(r.chosen_mass)},
                          {"cut", r.cut},
                          {"before", to_json(r.before)},
                          {"after", to_json(r.after)}});
  }
  Json cuts = Json::array();
  for (std::size_t c : s.ctx.cuts) cuts.push_back(c);
  Json body = Json{{"node", s.ctx.node.str()},
                   {"mass", to_json(s.ctx.mass)},
                   {"cuts", cuts},
                   {"rounds", rounds}};
  if (s.error) body["error"] = *s.error;
  return document("rl_report", body);
}

Json to_json(const SectionAudit& a) {
  Json live = Json::array();
  for (const auto& lv : a.live) live.push_back(nodes_json(lv));
  return document("section_report", Json{{"failures", strings_json(a.failures)},
                                         {"live", live},
                                         {"frontier", rationals_json(a.frontier)},
                                         {"tree", to_json(a.tree)}});
}

Json to_json(const FubiniReport& r) {
  return document("fubini_report", Json{{"product_mass", to_json(r.product_mass)},
                                        {"heavy_rows", nodes_json(r.heavy_rows)},
                                        {"heavy_row_mass", to_json(r.heavy_row_mass)},
                                        {"heavy_columns", nodes_json(r.heavy_columns)},
                                        {"heavy_column_mass", to_json(r.heavy_column_mass)},
                                        {"row_integral", to_json(r.row_integral)},
                                        {"column_integral", to_json(r.column_integral)},
                                        {"null_product", r.null_product},
                                        {"null_rows", r.null_rows},
                                        {"null_columns", r.null_columns},
                                        {"consistent", r.consistent}});
}

Json to_json(const UnfoldResult& r) {
  Json steps = Json::array();
  for (const RevealStep& s : r.plan.steps) {
    steps.push_back(Json{{"word", yword_str(s.word)},
                         {"anchors", s.anchors},
                         {"floor", to_json(s.floor)},
                         {"beta", to_json(s.beta)},
                         {"mass_before", to_json(s.mass_before)},
                         {"mass_after", to_json(s.mass_after)},
                         {"pending", s.pending}});
  }
  Json schedules = Json::object();
  for (const auto& [f, by_word] : r.plan.schedules) {
    Json w = Json::object();
    for (const auto& [word, sch] : by_word) {
      Json a = Json::array();
      for (const auto& [node, y] : sch) a.push_back(Json{{"at", node.str()}, {"digit", y}});
      w[yword_str(word)] = a;
    }
    schedules[f.str()] = w;
  }
  return document("unfold_report", Json{{"audit", strings_json(r.audit)},
                                        {"delta", to_json(r.delta)},
                                        {"eta", to_json(r.eta)},
                                        {"floor_mass", to_json(r.floor_mass)},
                                        {"steps", steps},
                                        {"frontier", nodes_json(r.frontier)},
                                        {"level_mass", rationals_json(r.level_mass)},
                                        {"schedules", schedules}});
}

}  // namespace mgame
