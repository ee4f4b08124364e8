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

#ifndef QLGASIM_CONFIGURATION_HPP
#define QLGASIM_CONFIGURATION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qlgasim/lattice.hpp"

namespace qlgasim {

/// Finite lattice-gas configuration: the basis label of a cell field.  Cells
/// in their quiescent state (value 0) are never stored, so the all-quiescent
/// configuration is the empty map and every configuration differs from it in
/// finitely many cells.
///
/// Storage is a coordinate-sorted vector, which doubles as the canonical
/// form: equality, ordering and hashing are structural.
class Configuration {
 public:
  using Cell = std::pair<Coord, std::uint64_t>;

  Configuration() = default;

  static Configuration quiescent() { return Configuration{}; }

  std::uint64_t value_at(Coord c) const;

  /// Sets the cell value; 0 erases the cell.
  void set_value(Coord c, std::uint64_t value);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t active_count() const { return cells_.size(); }
  bool is_quiescent() const { return cells_.empty(); }

  std::string to_string() const;

  friend auto operator<=>(const Configuration&, const Configuration&) = default;

 private:
  std::vector<Cell> cells_;
};

}  // namespace qlgasim

template <>
struct std::hash<qlgasim::Configuration> {
  std::size_t operator()(const qlgasim::Configuration& c) const noexcept {
    std::size_t seed = 0xc0f1;
    for (const auto& [coord, value] : c.cells()) {
      qlgasim::hash_mix(seed, std::hash<qlgasim::Coord>{}(coord));
      qlgasim::hash_mix(seed, std::hash<std::uint64_t>{}(value));
    }
    return seed;
  }
};

#endif
