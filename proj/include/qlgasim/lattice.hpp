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

#ifndef QLGASIM_LATTICE_HPP
#define QLGASIM_LATTICE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qlgasim/amplitude.hpp"

namespace qlgasim {

/// Lattice coordinate.  One-dimensional lattices keep y == 0.
struct Coord {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
  friend Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y}; }
  friend Coord operator-(Coord a, Coord b) { return {a.x - b.x, a.y - b.y}; }
};

/// Line and plane are unbounded; ring and torus wrap inclusive coordinate
/// ranges (a ring over [lo, hi] doubles as a truncation window for oracles).
class Lattice {
 public:
  enum class Kind { line, ring, plane, torus };

  static Lattice line();
  static Lattice ring(std::int64_t n_sites);  // sites 0..n-1
  static Lattice ring_range(std::int64_t x_lo, std::int64_t x_hi);
  static Lattice plane();
  static Lattice torus(std::int64_t size_x, std::int64_t size_y);  // origin 0,0

  Kind kind() const { return kind_; }
  bool is_2d() const { return kind_ == Kind::plane || kind_ == Kind::torus; }
  bool finite() const { return kind_ == Kind::ring || kind_ == Kind::torus; }

  std::int64_t x_lo() const { return x_lo_; }
  std::int64_t x_hi() const { return x_hi_; }
  std::int64_t y_lo() const { return y_lo_; }
  std::int64_t y_hi() const { return y_hi_; }
  std::int64_t size_x() const { return x_hi_ - x_lo_ + 1; }
  std::int64_t size_y() const { return y_hi_ - y_lo_ + 1; }

  /// Number of sites; finite lattices only.
  std::int64_t site_count() const;

  Coord wrap(Coord c) const;

  /// True when the coordinate sits on the wrap seam of a finite lattice.
  /// Used to flag when a truncated comparison is about to stop being
  /// faithful to an unbounded model.
  bool on_seam(Coord c) const;

  /// All sites in row-major (x, then y) order; finite lattices only.
  std::vector<Coord> all_coords() const;

  std::string describe() const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Kind kind_ = Kind::line;
  std::int64_t x_lo_ = 0, x_hi_ = 0, y_lo_ = 0, y_hi_ = 0;
};

}  // namespace qlgasim

template <>
struct std::hash<qlgasim::Coord> {
  std::size_t operator()(const qlgasim::Coord& c) const noexcept {
    std::size_t seed = std::hash<std::int64_t>{}(c.x);
    qlgasim::hash_mix(seed, std::hash<std::int64_t>{}(c.y));
    return seed;
  }
};

#endif
