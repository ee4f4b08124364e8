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

#ifndef QLGASIM_WALK_LABEL_HPP
#define QLGASIM_WALK_LABEL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>

#include "qlgasim/amplitude.hpp"

namespace qlgasim {

/// Basis label of the plain coined walk: position and velocity (+1 or -1).
struct StandardLabel {
  std::int64_t x = 0;
  int p = 1;

  friend auto operator<=>(const StandardLabel&, const StandardLabel&) = default;
};

/// Walker carrying its last `history_len` velocities.  Bit k of `tail` holds
/// velocity number k+1 counted from the most recent one; a set bit means -1.
/// Bit 0 is the current travel direction.
struct ParticleHistoryLabel {
  std::int64_t x = 0;
  std::uint32_t history_len = 1;
  std::uint32_t tail = 0;

  friend auto operator<=>(const ParticleHistoryLabel&,
                          const ParticleHistoryLabel&) = default;
};

/// Velocity-history walker with an extra control qubit deciding whether the
/// recycled velocity is kept or flipped.  Tail packing as above.
struct McGettrickLabel {
  std::int64_t x = 0;
  std::uint8_t c = 0;
  std::uint32_t history_len = 1;
  std::uint32_t tail = 0;

  friend auto operator<=>(const McGettrickLabel&, const McGettrickLabel&) = default;
};

/// Walker on a ring of `n_sites` positions whose sites remember visits.
/// Bit k of `mem` is the marker qubit of site k.  Supports up to 64 sites.
struct SiteHistoryLabel {
  std::int64_t x = 0;
  int p = 1;
  std::uint32_t n_sites = 2;
  std::uint64_t mem = 0;

  friend auto operator<=>(const SiteHistoryLabel&, const SiteHistoryLabel&) = default;
};

/// Planar walker; dir indexes the directions (west, east, south, north).
struct TwoDLabel {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::uint8_t dir = 0;

  friend auto operator<=>(const TwoDLabel&, const TwoDLabel&) = default;
};

using WalkLabel = std::variant<StandardLabel, ParticleHistoryLabel, McGettrickLabel,
                               SiteHistoryLabel, TwoDLabel>;

std::string to_string(const StandardLabel& l);
std::string to_string(const ParticleHistoryLabel& l);
std::string to_string(const McGettrickLabel& l);
std::string to_string(const SiteHistoryLabel& l);
std::string to_string(const TwoDLabel& l);
std::string to_string(const WalkLabel& l);

}  // namespace qlgasim

namespace std {

template <>
struct hash<qlgasim::StandardLabel> {
  size_t operator()(const qlgasim::StandardLabel& l) const noexcept {
    size_t h = 0x51a57ull;
    qlgasim::hash_mix(h, static_cast<size_t>(l.x));
    qlgasim::hash_mix(h, static_cast<size_t>(l.p == 1 ? 0 : 1));
    return h;
  }
};

template <>
struct hash<qlgasim::ParticleHistoryLabel> {
  size_t operator()(const qlgasim::ParticleHistoryLabel& l) const noexcept {
    size_t h = 0x9a871ull;
    qlgasim::hash_mix(h, static_cast<size_t>(l.x));
    qlgasim::hash_mix(h, l.history_len);
    qlgasim::hash_mix(h, l.tail);
    return h;
  }
};

template <>
struct hash<qlgasim::McGettrickLabel> {
  size_t operator()(const qlgasim::McGettrickLabel& l) const noexcept {
    size_t h = 0x3c0deull;
    qlgasim::hash_mix(h, static_cast<size_t>(l.x));
    qlgasim::hash_mix(h, l.c);
    qlgasim::hash_mix(h, l.history_len);
    qlgasim::hash_mix(h, l.tail);
    return h;
  }
};

template <>
struct hash<qlgasim::SiteHistoryLabel> {
  size_t operator()(const qlgasim::SiteHistoryLabel& l) const noexcept {
    size_t h = 0x7311ull;
    qlgasim::hash_mix(h, static_cast<size_t>(l.x));
    qlgasim::hash_mix(h, static_cast<size_t>(l.p == 1 ? 0 : 1));
    qlgasim::hash_mix(h, l.n_sites);
    qlgasim::hash_mix(h, static_cast<size_t>(l.mem));
    return h;
  }
};

template <>
struct hash<qlgasim::TwoDLabel> {
  size_t operator()(const qlgasim::TwoDLabel& l) const noexcept {
    size_t h = 0x2dull;
    qlgasim::hash_mix(h, static_cast<size_t>(l.x));
    qlgasim::hash_mix(h, static_cast<size_t>(l.y));
    qlgasim::hash_mix(h, l.dir);
    return h;
  }
};

template <>
struct hash<qlgasim::WalkLabel> {
  size_t operator()(const qlgasim::WalkLabel& l) const noexcept {
    size_t h = l.index();
    std::visit([&](const auto& alt) {
      using Alt = std::decay_t<decltype(alt)>;
      qlgasim::hash_mix(h, std::hash<Alt>{}(alt));
    }, l);
    return h;
  }
};

}  // namespace std

#endif
