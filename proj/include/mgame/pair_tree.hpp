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

#ifndef MGAME_PAIR_TREE_HPP_
#define MGAME_PAIR_TREE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgame/clopen.hpp"
#include "mgame/node.hpp"

namespace mgame {

// A finite word over the truncated alphabet {0, ..., k-1}.
using YWord = std::vector<int>;

std::string yword_str(const YWord& w);
YWord parse_yword(const std::string& s);
bool is_prefix(const YWord& a, const YWord& b);

// A closed set F of pairs (x, y) with x binary and y over {0, ..., k-1},
// given by a named builtin. Membership of the basic rectangle N_u x N_v is
// classified three ways.
class PairTree {
 public:
  enum class Kind { kFull, kEmpty, kXClopen, kFirstDigitMatch, kForbidden };

  static PairTree full(int k);
  static PairTree empty(int k);
  // F = C x (all y).
  static PairTree x_clopen(const std::vector<Node>& antichain, int k);
  // F = {(x, y) : y_0 = x_0}.
  static PairTree first_digit_match(int k);
  // Complement of the union of the listed rectangles N_u x N_v.
  static PairTree forbidden(std::vector<std::pair<Node, YWord>> rects, int k);

  Kind kind() const { return kind_; }
  int alphabet() const { return k_; }
  const std::vector<Node>& antichain() const { return antichain_; }
  const std::vector<std::pair<Node, YWord>>& rects() const { return rects_; }

  Cover classify(const Node& u, const YWord& v) const;
  bool compatible(const Node& u, const YWord& v) const {
    return classify(u, v) != Cover::kOutside;
  }
  // The projection {x : exists y, (x, y) in F} when it is clopen.
  std::optional<Clopen> projection() const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::kFull;
  int k_ = 2;
  std::vector<Node> antichain_;
  Clopen clopen_ = Clopen::full();
  std::vector<std::pair<Node, YWord>> rects_;
};

}  // namespace mgame

#endif  // MGAME_PAIR_TREE_HPP_
