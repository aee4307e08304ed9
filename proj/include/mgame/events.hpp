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

#ifndef MGAME_EVENTS_HPP_
#define MGAME_EVENTS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mgame/clopen.hpp"

namespace mgame {

// An indexed sequence of clopen events A_0, A_1, ...: either an explicit
// finite list (events past its end are empty) or a generator rule.
class EventFamily {
 public:
  enum class Kind { kList, kCoordinate, kConstant };

  static EventFamily list(std::vector<std::vector<Node>> antichains);
  // A_i = {x : x_i = bit}.
  static EventFamily coordinate(int bit);
  // A_i = the same clopen set for every i.
  static EventFamily constant(std::vector<Node> antichain);

  Kind kind() const { return kind_; }
  Clopen event(std::size_t i) const;
  // Number of events for list families; empty for generators.
  std::optional<std::size_t> size() const;

  int coordinate_bit() const { return bit_; }
  const std::vector<std::vector<Node>>& antichains() const { return antichains_; }

  // A_[lo, hi) = union of A_i for lo <= i < hi.
  Clopen block_union(std::size_t lo, std::size_t hi) const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::kList;
  int bit_ = 1;
  std::vector<std::vector<Node>> antichains_;
  std::vector<Clopen> events_;
};

}  // namespace mgame

#endif  // MGAME_EVENTS_HPP_
