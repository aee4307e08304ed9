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

#include "mgame/events.hpp"

namespace mgame {

EventFamily EventFamily::list(std::vector<std::vector<Node>> antichains) {
  EventFamily f;
  f.kind_ = Kind::kList;
  for (const auto& a : antichains) f.events_.push_back(Clopen::from_nodes(a));
  f.antichains_ = std::move(antichains);
  return f;
}

EventFamily EventFamily::coordinate(int bit) {
  EventFamily f;
  f.kind_ = Kind::kCoordinate;
  f.bit_ = bit ? 1 : 0;
  return f;
}

EventFamily EventFamily::constant(std::vector<Node> antichain) {
  EventFamily f;
  f.kind_ = Kind::kConstant;
  f.events_.push_back(Clopen::from_nodes(antichain));
  f.antichains_.push_back(std::move(antichain));
  return f;
}

Clopen EventFamily::event(std::size_t i) const {
  switch (kind_) {
    case Kind::kList:
      return i < events_.size() ? events_[i] : Clopen::empty();
    case Kind::kCoordinate:
      return Clopen::coordinate(i, bit_);
    case Kind::kConstant:
      return events_.front();
  }
  return Clopen::empty();
}

std::optional<std::size_t> EventFamily::size() const {
  if (kind_ == Kind::kList) return events_.size();
  return std::nullopt;
}

Clopen EventFamily::block_union(std::size_t lo, std::size_t hi) const {
  if (kind_ == Kind::kCoordinate) return Clopen::any_coordinate(lo, hi, bit_);
  if (kind_ == Kind::kConstant) return lo < hi ? events_.front() : Clopen::empty();
  Clopen out = Clopen::empty();
  for (std::size_t i = lo; i < hi; ++i) out = out | event(i);
  return out;
}

std::string EventFamily::describe() const {
  switch (kind_) {
    case Kind::kList:
      return "list(" + std::to_string(events_.size()) + ")";
    case Kind::kCoordinate:
      return "coordinate(" + std::to_string(bit_) + ")";
    case Kind::kConstant:
      return "constant";
  }
  return "?";
}

}  // namespace mgame
