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

#include "mgame/set_expr.hpp"

#include <functional>
#include <stdexcept>

namespace mgame {

namespace {

bool has_substring(const Node& t, const Node& pattern) {
  return t.str().find(pattern.str()) != std::string::npos;
}

Cover negate(Cover c) {
  if (c == Cover::kInside) return Cover::kOutside;
  if (c == Cover::kOutside) return Cover::kInside;
  return Cover::kMixed;
}

}  // namespace

SetExpr SetExpr::make(Impl impl) {
  // Precompute the exact clopen form where one exists.
  switch (impl.kind) {
    case Kind::kClopen:
    case Kind::kClosedTree:
    case Kind::kOpenUnion:
      if (impl.builtin == Builtin::kNodes && !impl.clopen) {
        impl.clopen = Clopen::from_nodes(impl.nodes);
      }
      break;
    case Kind::kLimSup: {
      // ⋂_{m<=H} ⋃_{m<=i<=H} A_i.
      Clopen acc = Clopen::full();
      for (std::size_t m = 0; m <= impl.horizon; ++m) {
        acc = acc & impl.family.block_union(m, impl.horizon + 1);
      }
      impl.clopen = acc;
      impl.truncated = true;
      break;
    }
    case Kind::kIntersection:
    case Kind::kUnion: {
      const bool is_and = impl.kind == Kind::kIntersection;
      Clopen acc = is_and ? Clopen::full() : Clopen::empty();
      bool exact = true;
      for (const SetExpr& a : impl.args) {
        impl.truncated = impl.truncated || a.truncated();
        if (!a.as_clopen()) {
          exact = false;
          continue;
        }
        acc = is_and ? (acc & *a.as_clopen()) : (acc | *a.as_clopen());
      }
      if (exact) impl.clopen = acc;
      break;
    }
    case Kind::kComplement:
      impl.truncated = impl.args.front().truncated();
      if (impl.args.front().as_clopen()) impl.clopen = ~*impl.args.front().as_clopen();
      break;
  }
  return SetExpr(std::make_shared<const Impl>(std::move(impl)));
}

SetExpr SetExpr::clopen(std::vector<Node> antichain) {
  if (!is_antichain(antichain)) {
    throw std::invalid_argument("clopen nodes must form an antichain");
  }
  Impl impl;
  impl.kind = Kind::kClopen;
  impl.nodes = std::move(antichain);
  return make(std::move(impl));
}

SetExpr SetExpr::clopen(const Clopen& set) {
  Impl impl;
  impl.kind = Kind::kClopen;
  impl.nodes = set.antichain();
  impl.clopen = set;
  return make(std::move(impl));
}

SetExpr SetExpr::closed_tree(std::vector<Node> leaves) {
  Impl impl;
  impl.kind = Kind::kClosedTree;
  impl.nodes = std::move(leaves);
  return make(std::move(impl));
}

SetExpr SetExpr::avoid_substring(const Node& pattern) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  Impl impl;
  impl.kind = Kind::kClosedTree;
  impl.builtin = Builtin::kSubstring;
  impl.pattern = pattern;
  return make(std::move(impl));
}

SetExpr SetExpr::open_union(std::vector<Node> nodes) {
  Impl impl;
  impl.kind = Kind::kOpenUnion;
  impl.nodes = std::move(nodes);
  return make(std::move(impl));
}

SetExpr SetExpr::contains_substring(const Node& pattern) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  Impl impl;
  impl.kind = Kind::kOpenUnion;
  impl.builtin = Builtin::kSubstring;
  impl.pattern = pattern;
  return make(std::move(impl));
}

SetExpr SetExpr::limsup(EventFamily family, std::size_t horizon) {
  Impl impl;
  impl.kind = Kind::kLimSup;
  impl.family = std::move(family);
  impl.horizon = horizon;
  return make(std::move(impl));
}

SetExpr SetExpr::intersection(std::vector<SetExpr> args) {
  Impl impl;
  impl.kind = Kind::kIntersection;
  impl.args = std::move(args);
  return make(std::move(impl));
}

SetExpr SetExpr::unite(std::vector<SetExpr> args) {
  Impl impl;
  impl.kind = Kind::kUnion;
  impl.args = std::move(args);
  return make(std::move(impl));
}

SetExpr SetExpr::complement(SetExpr arg) {
  Impl impl;
  impl.kind = Kind::kComplement;
  impl.args.push_back(std::move(arg));
  return make(std::move(impl));
}

Cover SetExpr::classify(const Node& t) const {
  if (impl_->clopen) return impl_->clopen->classify(t);
  switch (impl_->kind) {
    case Kind::kClosedTree:
      // Non-empty pattern: the avoiding set has empty interior.
      return has_substring(t, impl_->pattern) ? Cover::kOutside : Cover::kMixed;
    case Kind::kOpenUnion:
      return has_substring(t, impl_->pattern) ? Cover::kInside : Cover::kMixed;
    case Kind::kComplement:
      return negate(impl_->args.front().classify(t));
    case Kind::kIntersection: {
      bool all_in = true;
      for (const SetExpr& a : impl_->args) {
        const Cover c = a.classify(t);
        if (c == Cover::kOutside) return Cover::kOutside;
        all_in = all_in && c == Cover::kInside;
      }
      return all_in ? Cover::kInside : Cover::kMixed;
    }
    case Kind::kUnion: {
      bool all_out = true;
      for (const SetExpr& a : impl_->args) {
        const Cover c = a.classify(t);
        if (c == Cover::kInside) return Cover::kInside;
        all_out = all_out && c == Cover::kOutside;
      }
      return all_out ? Cover::kOutside : Cover::kMixed;
    }
    default:
      return Cover::kMixed;
  }
}

MeasureBounds SetExpr::bounds(const DyadicMeasure& mu, std::size_t d) const {
  MeasureBounds out;
  out.truncated = impl_->truncated;
  if (impl_->clopen) {
    out.lower = out.upper = impl_->clopen->mass(mu);
    return out;
  }
  std::function<void(const Node&)> walk = [&](const Node& t) {
    const Rational m = mu.mass(t);
    if (m.is_zero()) return;
    switch (classify(t)) {
      case Cover::kInside:
        out.lower += m;
        out.upper += m;
        return;
      case Cover::kOutside:
        return;
      case Cover::kMixed:
        if (t.size() >= d) {
          out.upper += m;
          return;
        }
        walk(t.child(0));
        walk(t.child(1));
        return;
    }
  };
  walk(Node());
  return out;
}

std::optional<Rational> SetExpr::exact_mass_within(const DyadicMeasure& mu,
                                                   const Node& t) const {
  if (!impl_->clopen) return std::nullopt;
  return impl_->clopen->mass_within(mu, t);
}

std::string SetExpr::describe() const {
  auto list = [](const std::vector<Node>& ns) {
    std::string s = "{";
    for (std::size_t i = 0; i < ns.size(); ++i) {
      s += (i ? "," : "") + std::string("\"") + ns[i].str() + "\"";
    }
    return s + "}";
  };
  auto join = [](const std::vector<SetExpr>& as, const char* sep) {
    std::string s = "(";
    for (std::size_t i = 0; i < as.size(); ++i) s += (i ? sep : "") + as[i].describe();
    return s + ")";
  };
  switch (impl_->kind) {
    case Kind::kClopen:
      return "Clopen" + list(impl_->nodes);
    case Kind::kClosedTree:
      return impl_->builtin == Builtin::kNodes ? "ClosedTree" + list(impl_->nodes)
                                               : "Avoid(\"" + impl_->pattern.str() + "\")";
    case Kind::kOpenUnion:
      return impl_->builtin == Builtin::kNodes ? "Open" + list(impl_->nodes)
                                               : "Contains(\"" + impl_->pattern.str() + "\")";
    case Kind::kLimSup:
      return "LimSup[" + impl_->family.describe() + ", H=" + std::to_string(impl_->horizon) + "]";
    case Kind::kIntersection:
      return "Intersection" + join(impl_->args, " & ");
    case Kind::kUnion:
      return "Union" + join(impl_->args, " | ");
    case Kind::kComplement:
      return "Complement(" + impl_->args.front().describe() + ")";
  }
  return "?";
}

}  // namespace mgame
