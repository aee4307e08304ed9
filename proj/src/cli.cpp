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

#include "mgame/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mgame/adversary.hpp"
#include "mgame/decide.hpp"
#include "mgame/strategies.hpp"

namespace mgame {

namespace {

CommandResult input_error(const std::string& what) {
  CommandResult r;
  r.exit_code = kExitInput;
  r.message = "error: " + what;
  return r;
}

template <class F>
CommandResult guarded(F&& f) {
  try {
    return f();
  } catch (const JsonError& e) {
    return input_error(e.what());
  } catch (const std::invalid_argument& e) {
    return input_error(e.what());
  }
}

std::pair<std::string, std::string> split_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return {spec, ""};
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

std::uint64_t seed_of(const std::string& arg, std::uint64_t fallback) {
  if (arg.empty()) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(arg, &used);
    if (used == arg.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad seed \"" + arg + "\"");
}

SetExpr payoff_set(const Payoff& p) {
  if (!p.is_pairs()) return p.set();
  auto proj = p.pairs().projection();
  if (!proj) throw std::invalid_argument("pair payoff has no clopen projection");
  return SetExpr::clopen(*proj);
}

}  // namespace

Json load_document(const std::string& source, std::string_view kind) {
  Json j = (!source.empty() && source.front() == '{') ? parse_json(source, "inline")
                                                      : read_json_file(source);
  expect_document(j, kind);
  return j;
}

Rational parse_stake(const std::string& text) {
  const Rational s = Rational::parse(text);
  if (s.sign() < 0 || s >= Rational(1)) {
    throw std::invalid_argument("stake " + s.str() + " outside [0, 1)");
  }
  return s;
}

StrategyIPtr make_strategy_I(const std::string& spec, const DyadicMeasure& mu, const SetExpr& a,
                             const Rational& s, std::uint64_t seed) {
  if (!spec.empty() && spec.front() == '{') {
    const Json j = parse_json(spec, "strategy");
    const std::string kind = field(j, "kind", "strategy").get<std::string>();
    if (kind != "closed_I") throw JsonError("strategy.kind", "expected \"closed_I\"");
    const Json& p = field(j, "parameters", "strategy");
    return std::make_shared<ClosedStrategyI>(
        mu, clopen_from(field(p, "target", "strategy.parameters"), "strategy.parameters.target"),
        rational_from(field(p, "eps", "strategy.parameters"), "strategy.parameters.eps"),
        "closed_I");
  }
  const auto [name, arg] = split_spec(spec);
  if (name == "constructed") {
    const Decision d = decide_by_measure(mu, a, s);
    if (!d.strategy_i) {
      throw std::invalid_argument("I has no winning strategy: mu(A^c) = " +
                                  d.complement_mass.str() + " <= s = " + s.str());
    }
    return d.strategy_i;
  }
  if (name == "random") return std::make_shared<RandomI>(seed_of(arg, seed));
  if (name == "greedy") {
    if (arg.empty() || arg == "proportional") {
      return std::make_shared<GreedyI>(a, GreedyI::Mode::kProportional);
    }
    if (arg == "extreme") return std::make_shared<GreedyI>(a, GreedyI::Mode::kExtreme);
  }
  throw std::invalid_argument("unknown I strategy \"" + spec + "\"");
}

StrategyIIPtr make_strategy_II(const std::string& spec, const DyadicMeasure& mu,
                               const SetExpr& a, const Rational& s, std::uint64_t seed) {
  if (!spec.empty() && spec.front() == '{') {
    const Json j = parse_json(spec, "strategy");
    const std::string kind = field(j, "kind", "strategy").get<std::string>();
    if (kind != "open_cover_II") throw JsonError("strategy.kind", "expected \"open_cover_II\"");
    const Json& p = field(j, "parameters", "strategy");
    return strategy_II_from_open(
        mu, SetExpr::clopen(clopen_from(field(p, "cover", "strategy.parameters"),
                                        "strategy.parameters.cover")),
        rational_from(field(p, "stake", "strategy.parameters"), "strategy.parameters.stake"));
  }
  const auto [name, arg] = split_spec(spec);
  if (name == "constructed") {
    const Decision d = decide_by_measure(mu, a, s);
    if (!d.strategy_ii) {
      throw std::invalid_argument("II has no winning strategy: mu(A^c) = " +
                                  d.complement_mass.str() + " > s = " + s.str());
    }
    return d.strategy_ii;
  }
  if (name == "random") return std::make_shared<RandomII>(seed_of(arg, seed));
  if (name == "greedy") {
    if (arg.empty() || arg == "most-a") return std::make_shared<GreedyII>(a, GreedyII::Mode::kMostA);
    if (arg == "thinnest") return std::make_shared<GreedyII>(a, GreedyII::Mode::kThinnest);
  }
  throw std::invalid_argument("unknown II strategy \"" + spec + "\"");
}

CommandResult cmd_play(const RunConfig& cfg) {
  return guarded([&] {
    const Rational s = parse_stake(cfg.stake);
    const DyadicMeasure mu = measure_from(load_document(cfg.measure, "measure"), "$");
    if (cfg.payoff.empty()) throw std::invalid_argument("--payoff is required");
    const Payoff payoff = payoff_from(load_document(cfg.payoff, "payoff"), "$");
    const SetExpr a = payoff_set(payoff);
    Position start = Position::start_g(s, mu);
    if (cfg.variant == "unfolded") {
      start = Position::start_unfolded(s, mu, cfg.alphabet);
    } else if (cfg.variant != "G") {
      throw std::invalid_argument("play supports the variants G and unfolded");
    }
    const std::uint64_t seed = cfg.seed.value_or(1);
    auto one = make_strategy_I(cfg.strategy_i, mu, a, s, seed);
    auto two = make_strategy_II(cfg.strategy_ii, mu, a, s, seed);
    std::size_t d = cfg.depth;
    if (d == 0) {
      const auto& c = a.as_clopen();
      d = std::max<std::size_t>(c ? c->depth() : 8, 1);
    }
    const Trace t = referee(*one, *two, start, payoff, d);
    CommandResult r;
    r.output = to_json(t);
    r.message = outcome_name(t.outcome) + " after " + std::to_string(t.moves.size()) + " rounds";
    if (t.violation) {
      r.exit_code = kExitFailure;
      r.message += "; violation: " + *t.violation;
    }
    return r;
  });
}

CommandResult cmd_decide(const RunConfig& cfg) {
  return guarded([&] {
    const Rational s = parse_stake(cfg.stake);
    const DyadicMeasure mu = measure_from(load_document(cfg.measure, "measure"), "$");
    if (cfg.payoff.empty()) throw std::invalid_argument("--payoff is required");
    const Payoff payoff = payoff_from(load_document(cfg.payoff, "payoff"), "$");
    const SetExpr a = payoff_set(payoff);
    if (!a.as_clopen()) {
      throw std::invalid_argument("unsupported payoff: decide needs a clopen set, got " +
                                  a.describe());
    }
    const Decision d = decide_by_measure(
        mu, a, s, cfg.depth ? std::optional<std::size_t>(cfg.depth) : std::nullopt);
    Json strategy;
    if (d.strategy_i) {
      strategy = Json{{"kind", "closed_I"},
                      {"parameters",
                       Json{{"target", to_json(d.strategy_i->target())},
                            {"eps", to_json(d.strategy_i->eps())}}}};
    } else {
      strategy = Json{{"kind", "open_cover_II"},
                      {"parameters", Json{{"cover", to_json(~*a.as_clopen())}, {"stake", to_json(s)}}}};
    }
    const std::string who = d.winner == Certificate::Player::kI ? "I" : "II";
    CommandResult r;
    r.output = document("decision", Json{{"winner", who},
                                         {"stake", to_json(s)},
                                         {"complement_mass", to_json(d.complement_mass)},
                                         {"strategy", strategy},
                                         {"certificate", to_json(d.certificate)}});
    r.message = who + " wins: mu(A^c) = " + d.complement_mass.str() + ", s = " + s.str();
    return r;
  });
}

CommandResult cmd_verify(const RunConfig& cfg) {
  return guarded([&] {
    SuiteOptions o;
    o.cases = cfg.cases;
    o.depth = cfg.depth;
    o.horizon = cfg.horizon;
    o.rounds = cfg.rounds;
    o.q = cfg.grid_q;
    o.seed = cfg.seed;
    o.adversaries = cfg.adversaries;
    const SuiteReport rep = run_suite(cfg.suite, o);
    CommandResult r;
    r.output = to_json(rep);
    r.exit_code = rep.pass() ? kExitOk : kExitFailure;
    r.message = cfg.suite + ": " + (rep.pass() ? "pass" : "FAIL");
    for (const auto& p : rep.properties) {
      if (!p.pass()) r.message += "\n  " + p.name + ": " + p.counterexample;
    }
    return r;
  });
}

CommandResult cmd_replay(const RunConfig& cfg) {
  return guarded([&] {
    if (cfg.trace.empty()) throw std::invalid_argument("--trace is required");
    std::ifstream in(cfg.trace, std::ios::binary);
    if (!in) throw JsonError(cfg.trace, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string text = ss.str();
    const Trace t = trace_from(parse_json(text, cfg.trace), "$");
    const Trace again = replay(t);
    CommandResult r;
    r.output = to_json(again);
    const bool same = dump(r.output) == text;
    r.exit_code = same ? kExitOk : kExitFailure;
    r.message = same ? "replay matches byte for byte" : "replay differs from the file";
    return r;
  });
}

}  // namespace mgame
