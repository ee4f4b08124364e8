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

#ifndef QLGASIM_ANALYSIS_HPP
#define QLGASIM_ANALYSIS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "qlgasim/correspondence.hpp"
#include "qlgasim/qlga.hpp"
#include "qlgasim/walk_model.hpp"

namespace qlgasim {

/// Probability of finding the walker at each position, sorted by coordinate.
/// One-dimensional supports keep y == 0.
struct Distribution {
  int dims = 1;
  std::vector<std::pair<Coord, double>> support;
  double total = 0.0;  // sum over support; 1 within tolerance for normalized input
};

/// Marginal position distribution of a walk state.
Distribution position_distribution(const WalkState& s);

/// Marginal position distribution of a configuration state whose every
/// support configuration holds exactly one particle (its cell gives the
/// position).  Throws on any other particle number.
Distribution position_distribution(const ConfigState& s, const CellSpec& spec);

struct SpreadRow {
  std::uint64_t t = 0;
  double mean = 0.0;
  double stddev = 0.0;
};

struct SpreadFit {
  std::uint64_t window_lo = 0;
  std::uint64_t window_hi = 0;
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

struct SpreadSeries {
  std::vector<SpreadRow> rows;  // t = 0..t_max, strictly increasing
  SpreadFit fit;                // least-squares stddev vs t over the window
};

/// Evolves `init` for t_max steps recording position mean/stddev per step,
/// then fits stddev vs t linearly over `window` (default [t_max/4, t_max]).
/// One-dimensional walks only.
SpreadSeries spread_series(
    const WalkModel& model, const WalkState& init, std::uint64_t t_max,
    std::optional<std::pair<std::uint64_t, std::uint64_t>> window = std::nullopt);

// CSV emission.  UTF-8, header row, rows in canonical order (coordinates
// ascending, 2D row-major), floats with 17 significant digits; writes are
// atomic (temp file + rename) and byte-identical across re-runs.
void emit_csv(const Distribution& d, const std::filesystem::path& path);
void emit_csv(const SpreadSeries& s, const std::filesystem::path& path);
void emit_csv(const EquivalenceReport& r, const std::filesystem::path& path);

/// The fixed float formatting used in CSV output (printf %.17g).
std::string format_double(double v);

/// Writes `body` to `path` via a temp file and atomic rename, so readers never
/// observe a partial file and interrupted runs leave no half-written output.
void write_text_atomically(const std::filesystem::path& path,
                           const std::string& body);

}  // namespace qlgasim

#endif
