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

#include "qlgasim/walk_label.hpp"

#include <sstream>

namespace qlgasim {

namespace {

std::string tail_bits(std::uint32_t tail, std::uint32_t len) {
  // Most recent velocity first; '+' = +1 (clear bit), '-' = -1 (set bit).
  std::string s;
  for (std::uint32_t k = 0; k < len; ++k) {
    s.push_back(((tail >> k) & 1u) ? '-' : '+');
  }
  return s;
}

}  // namespace

std::string to_string(const StandardLabel& l) {
  std::ostringstream os;
  os << "(x=" << l.x << ", p=" << (l.p == 1 ? "+1" : "-1") << ")";
  return os.str();
}

std::string to_string(const ParticleHistoryLabel& l) {
  std::ostringstream os;
  os << "(x=" << l.x << ", tail=" << tail_bits(l.tail, l.history_len) << ")";
  return os.str();
}

std::string to_string(const McGettrickLabel& l) {
  std::ostringstream os;
  os << "(x=" << l.x << ", c=" << static_cast<int>(l.c)
     << ", tail=" << tail_bits(l.tail, l.history_len) << ")";
  return os.str();
}

std::string to_string(const SiteHistoryLabel& l) {
  std::ostringstream os;
  os << "(x=" << l.x << ", p=" << (l.p == 1 ? "+1" : "-1") << ", mem=";
  for (std::uint32_t k = 0; k < l.n_sites; ++k) {
    os << ((l.mem >> k) & 1ull);
  }
  os << ")";
  return os.str();
}

std::string to_string(const TwoDLabel& l) {
  static const char* kDirs[] = {"w", "e", "s", "n"};
  std::ostringstream os;
  os << "(x=" << l.x << ", y=" << l.y << ", dir="
     << (l.dir < 4 ? kDirs[l.dir] : "?") << ")";
  return os.str();
}

std::string to_string(const WalkLabel& l) {
  return std::visit([](const auto& alt) { return to_string(alt); }, l);
}

}  // namespace qlgasim
