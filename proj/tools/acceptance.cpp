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

// Runs the nine acceptance criteria and prints one line per criterion.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mgame/suites.hpp"

namespace {

struct Criterion {
  int id;
  const char* suite;
  const char* title;
  long long limit_ms;
};

// Scales are the suite defaults; time limits are per criterion.
const std::vector<Criterion> kCriteria = {
    {1, "equiv", "game-measure equivalence, 200 instances x 102 adversaries", 60000},
    {2, "oracle", "grid minimax agrees with the measure rule, Q = 16", 120000},
    {3, "certify", "tree level sums and replay for 50 II strategies, depth 6", 60000},
    {4, "numsplit", "index bound on 10^4 random triples", 30000},
    {5, "bc", "divergence blocks and composed I certificate, depth 12", 120000},
    {6, "rl", "lim sup strategy, 10^3 plays x 20 rounds", 300000},
    {7, "fubini", "section transformer bounds and fubini_check", 180000},
    {8, "unfold", "prune, stabilize and unfolded strategy, depth 8", 180000},
    {9, "uniformize", "uniformization table to depth 8, eps = 1/4", 60000},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mgame acceptance criteria"};
  std::vector<int> only;
  std::string out_dir;
  app.add_option("--only", only, "criterion numbers to run");
  app.add_option("--reports", out_dir, "directory for JSON suite reports");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (const Criterion& c : kCriteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    mgame::SuiteReport r;
    std::string note;
    try {
      r = mgame::run_suite(c.suite, {});
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    const bool in_time = r.elapsed_ms <= c.limit_ms;
    const bool ok = note.empty() && r.pass() && in_time;
    if (ok) {
      std::size_t checks = 0;
      for (const auto& p : r.properties) checks += p.checked;
      note = std::to_string(checks) + " checks";
    } else if (note.empty()) {
      for (const auto& p : r.properties) {
        if (!p.pass()) {
          note = p.name + ": " + std::to_string(p.failures) + "/" + std::to_string(p.checked) +
                 " failed; " + p.counterexample;
          break;
        }
      }
      if (note.empty()) note = "over the time limit of " + std::to_string(c.limit_ms / 1000) + " s";
    }
    std::printf("criterion %d [%s] %s: %s (%.1f s) %s\n", c.id, c.suite, c.title,
                ok ? "PASS" : "FAIL", static_cast<double>(r.elapsed_ms) / 1000.0, note.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
    if (!out_dir.empty() && note.rfind("exception", 0) != 0) {
      mgame::write_json_file(out_dir + "/" + c.suite + ".json", mgame::to_json(r));
    }
  }
  return failed ? 1 : 0;
}
