// Copyright 2026 The qlgasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlgasim/configuration.hpp"

#include <algorithm>

namespace qlgasim {
namespace {

template <typename Cells>
auto find_coord(Cells& cells, Coord c) {
  return std::lower_bound(
      cells.begin(), cells.end(), c,
      [](const Configuration::Cell& cell, Coord want) { return cell.first < want; });
}

}  // namespace

std::uint64_t Configuration::value_at(Coord c) const {
  auto it = find_coord(cells_, c);
  return (it != cells_.end() && it->first == c) ? it->second : 0;
}

void Configuration::set_value(Coord c, std::uint64_t value) {
  auto it = find_coord(cells_, c);
  const bool present = it != cells_.end() && it->first == c;
  if (value == 0) {
    if (present) {
      cells_.erase(it);
    }
  } else if (present) {
    it->second = value;
  } else {
    cells_.insert(it, {c, value});
  }
}

std::string Configuration::to_string() const {
  if (cells_.empty()) {
    return "{}";
  }
  std::string out = "{";
  bool first = true;
  for (const auto& [coord, value] : cells_) {
    if (!first) {
      out += ";";
    }
    first = false;
    out += std::to_string(coord.x);
    if (coord.y != 0) {
      out += "," + std::to_string(coord.y);
    }
    out += ":" + std::to_string(value);
  }
  out += "}";
  return out;
}

}  // namespace qlgasim
