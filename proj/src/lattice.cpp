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

#include "qlgasim/lattice.hpp"

#include "qlgasim/errors.hpp"

namespace qlgasim {
namespace {

std::int64_t wrap_axis(std::int64_t v, std::int64_t lo, std::int64_t hi) {
  const std::int64_t n = hi - lo + 1;
  std::int64_t r = (v - lo) % n;
  if (r < 0) {
    r += n;
  }
  return lo + r;
}

}  // namespace

Lattice Lattice::line() { return Lattice{}; }

Lattice Lattice::ring(std::int64_t n_sites) { return ring_range(0, n_sites - 1); }

Lattice Lattice::ring_range(std::int64_t x_lo, std::int64_t x_hi) {
  if (x_hi - x_lo + 1 < 2) {
    throw Error("Lattice: a ring needs at least two sites");
  }
  Lattice l;
  l.kind_ = Kind::ring;
  l.x_lo_ = x_lo;
  l.x_hi_ = x_hi;
  return l;
}

Lattice Lattice::plane() {
  Lattice l;
  l.kind_ = Kind::plane;
  return l;
}

Lattice Lattice::torus(std::int64_t size_x, std::int64_t size_y) {
  if (size_x < 2 || size_y < 2) {
    throw Error("Lattice: a torus needs at least two sites per axis");
  }
  Lattice l;
  l.kind_ = Kind::torus;
  l.x_hi_ = size_x - 1;
  l.y_hi_ = size_y - 1;
  return l;
}

std::int64_t Lattice::site_count() const {
  if (!finite()) {
    throw Error("Lattice: site_count requires a finite lattice");
  }
  return kind_ == Kind::ring ? size_x() : size_x() * size_y();
}

Coord Lattice::wrap(Coord c) const {
  switch (kind_) {
    case Kind::line:
    case Kind::plane:
      return c;
    case Kind::ring:
      return {wrap_axis(c.x, x_lo_, x_hi_), 0};
    case Kind::torus:
      return {wrap_axis(c.x, x_lo_, x_hi_), wrap_axis(c.y, y_lo_, y_hi_)};
  }
  return c;
}

bool Lattice::on_seam(Coord c) const {
  switch (kind_) {
    case Kind::line:
    case Kind::plane:
      return false;
    case Kind::ring:
      return c.x == x_lo_ || c.x == x_hi_;
    case Kind::torus:
      return c.x == x_lo_ || c.x == x_hi_ || c.y == y_lo_ || c.y == y_hi_;
  }
  return false;
}

std::vector<Coord> Lattice::all_coords() const {
  if (!finite()) {
    throw Error("Lattice: enumeration requires a finite lattice");
  }
  std::vector<Coord> out;
  out.reserve(static_cast<std::size_t>(site_count()));
  if (kind_ == Kind::ring) {
    for (std::int64_t x = x_lo_; x <= x_hi_; ++x) {
      out.push_back({x, 0});
    }
  } else {
    for (std::int64_t x = x_lo_; x <= x_hi_; ++x) {
      for (std::int64_t y = y_lo_; y <= y_hi_; ++y) {
        out.push_back({x, y});
      }
    }
  }
  return out;
}

std::string Lattice::describe() const {
  switch (kind_) {
    case Kind::line:
      return "line";
    case Kind::ring:
      return "ring[" + std::to_string(x_lo_) + ".." + std::to_string(x_hi_) + "]";
    case Kind::plane:
      return "plane";
    case Kind::torus:
      return "torus[" + std::to_string(size_x()) + "x" + std::to_string(size_y()) + "]";
  }
  return "?";
}

}  // namespace qlgasim
