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

#ifndef QLGASIM_AMPLITUDE_HPP
#define QLGASIM_AMPLITUDE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>

namespace qlgasim {

using Amplitude = std::complex<double>;

inline bool amplitude_is_finite(const Amplitude& a) {
  return std::isfinite(a.real()) && std::isfinite(a.imag());
}

/// |a|^2 without the sqrt/overflow handling of std::abs.
inline double abs2(const Amplitude& a) {
  return a.real() * a.real() + a.imag() * a.imag();
}

/// Order-sensitive hash mixing (boost::hash_combine recipe, 64-bit constant).
inline void hash_mix(std::size_t& seed, std::size_t value) {
  seed ^= value + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
}

}  // namespace qlgasim

#endif
