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

#ifndef MGAME_SUITES_HPP_
#define MGAME_SUITES_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgame/io.hpp"

namespace mgame {

// Zero / empty fields take the suite's default (the acceptance scale).
struct SuiteOptions {
  std::size_t cases = 0;
  std::size_t depth = 0;
  std::size_t horizon = 0;
  std::size_t rounds = 0;
  int q = 0;
  std::optional<std::uint64_t> seed;
  std::size_t adversaries = 0;
};

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  // Exact values of the first failure.
  std::string counterexample;
  bool pass() const { return failures == 0 && checked > 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;
  long long elapsed_ms = 0;
  // Suite-specific tables (surrogates, agreement matrix, ...).
  Json extra = Json::object();
  bool pass() const;
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);
Json to_json(const SuiteReport& r);

}  // namespace mgame

#endif  // MGAME_SUITES_HPP_
