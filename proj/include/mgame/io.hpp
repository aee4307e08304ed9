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

#ifndef MGAME_IO_HPP_
#define MGAME_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mgame/borel_cantelli.hpp"
#include "mgame/certificate.hpp"
#include "mgame/fubini.hpp"
#include "mgame/referee.hpp"
#include "mgame/renyi_lamperti.hpp"
#include "mgame/unfolding.hpp"

namespace mgame {

// Key order is kept as written, so a parsed document re-serializes to the
// same bytes.
using Json = nlohmann::ordered_json;

class JsonError : public std::runtime_error {
 public:
  JsonError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// {"format": "mgame.<kind>/1", ...body}
Json document(std::string_view kind, const Json& body);
// Throws JsonError unless j is a document of that kind.
void expect_document(const Json& j, std::string_view kind);
std::string dump(const Json& j);
Json parse_json(const std::string& text, const std::string& source);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// Field access with a path for diagnostics.
const Json& field(const Json& j, const std::string& key, const std::string& path);

Json to_json(const Rational& r);
Rational rational_from(const Json& j, const std::string& path);
Json to_json(const Node& t);
Node node_from(const Json& j, const std::string& path);
std::vector<Node> nodes_from(const Json& j, const std::string& path);

Json to_json(const DyadicMeasure& mu);
DyadicMeasure measure_from(const Json& j, const std::string& path);
Json to_json(const ProductMeasure& mu);
ProductMeasure product_measure_from(const Json& j, const std::string& path);

Json to_json(const Clopen& c);
Clopen clopen_from(const Json& j, const std::string& path);
Json to_json(const EventFamily& f);
EventFamily family_from(const Json& j, const std::string& path);
Json to_json(const SetExpr& s);
SetExpr set_from(const Json& j, const std::string& path);
Json to_json(const PairTree& t);
PairTree pair_tree_from(const Json& j, const std::string& path);
Json to_json(const Payoff& p);
Payoff payoff_from(const Json& j, const std::string& path);

Json to_json(const MoveI& m);
MoveI move_i_from(const Json& j, const std::string& path);
Json to_json(const MoveII& m);
MoveII move_ii_from(const Json& j, const std::string& path);
Json to_json(const Round& r);
Round round_from(const Json& j, const std::string& path);

// The start of a game: variant, stake, measures, alphabet. The history is
// not part of it.
Json start_json(const Position& p);
Position start_from(const Json& j, const std::string& path);

Json to_json(const Trace& t);
Trace trace_from(const Json& j, const std::string& path);

Json to_json(const IWitness& w);
IWitness i_witness_from(const Json& j, const std::string& path);
Json to_json(const IIWitness& w);
IIWitness ii_witness_from(const Json& j, const std::string& path);
Json to_json(const Certificate& c);
Certificate certificate_from(const Json& j, const std::string& path);

Json to_json(const BlockSchedule& s);
BlockSchedule schedule_from(const Json& j, const std::string& path);

// u -> digit string.
Json to_json(const UniformTable& t);
std::map<Node, YWord> uniform_digits_from(const Json& j, const std::string& path);

// Reports: written, never read back.
Json to_json(const Surrogate& s);
Json to_json(const RLState& s);
Json to_json(const SectionAudit& a);
Json to_json(const FubiniReport& r);
Json to_json(const UnfoldResult& r);

}  // namespace mgame

#endif  // MGAME_IO_HPP_
