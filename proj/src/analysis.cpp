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

#include "qlgasim/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "qlgasim/errors.hpp"

namespace qlgasim {

namespace {

Distribution from_weights(const std::map<Coord, double>& weights, int dims) {
  Distribution d;
  d.dims = dims;
  d.support.reserve(weights.size());
  for (const auto& [coord, p] : weights) {
    d.support.emplace_back(coord, p);
    d.total += p;
  }
  return d;
}

}  // namespace

void write_text_atomically(const std::filesystem::path& path,
                           const std::string& body) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open for writing: " + tmp.string());
    }
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    out.flush();
    if (!out) {
      throw IoError("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw IoError("cannot replace " + path.string() + ": " + ec.message());
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Distribution position_distribution(const WalkState& s) {
  std::map<Coord, double> weights;
  bool two_d = false;
  for (const auto& [label, amp] : s.entries()) {
    const double p = abs2(amp);
    std::visit(
        [&](const auto& alt) {
          using Alt = std::decay_t<decltype(alt)>;
          if constexpr (std::is_same_v<Alt, TwoDLabel>) {
            two_d = true;
            weights[Coord{alt.x, alt.y}] += p;
          } else {
            weights[Coord{alt.x, 0}] += p;
          }
        },
        label);
  }
  return from_weights(weights, two_d ? 2 : 1);
}

Distribution position_distribution(const ConfigState& s, const CellSpec& spec) {
  std::map<Coord, double> weights;
  const bool two_d = spec.lattice.is_2d();
  for (const auto& [config, amp] : s.entries()) {
    Coord where{0, 0};
    int found = 0;
    for (const auto& [coord, value] : config.cells()) {
      const int n = spec.particles_in(value);
      if (n > 0) {
        found += n;
        where = coord;
      }
    }
    if (found != 1) {
      throw Error("position of a configuration is defined only in the "
                  "single-particle sector");
    }
    weights[where] += abs2(amp);
  }
  return from_weights(weights, two_d ? 2 : 1);
}

SpreadSeries spread_series(
    const WalkModel& model, const WalkState& init, std::uint64_t t_max,
    std::optional<std::pair<std::uint64_t, std::uint64_t>> window) {
  if (model.kind() == WalkKind::two_d) {
    throw Error("spread series are defined for one-dimensional walks");
  }
  const std::uint64_t lo = window.has_value() ? window->first : t_max / 4;
  const std::uint64_t hi = window.has_value() ? window->second : t_max;
  if (hi > t_max || lo > hi) {
    throw Error("fit window must lie inside [0, t_max]");
  }

  SpreadSeries series;
  series.rows.reserve(t_max + 1);
  WalkState state = init;
  for (std::uint64_t t = 0; t <= t_max; ++t) {
    if (t > 0) {
      state = model.step_at(state, t - 1);
    }
    const Distribution d = position_distribution(state);
    double mean = 0.0;
    double second = 0.0;
    for (const auto& [coord, p] : d.support) {
      mean += p * static_cast<double>(coord.x);
      second += p * static_cast<double>(coord.x) * static_cast<double>(coord.x);
    }
    const double var = std::max(0.0, second - mean * mean);
    series.rows.push_back(SpreadRow{t, mean, std::sqrt(var)});
  }

  // Least squares of stddev against t over the window.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t n = 0;
  for (const SpreadRow& row : series.rows) {
    if (row.t < lo || row.t > hi) {
      continue;
    }
    const double x = static_cast<double>(row.t);
    sx += x;
    sy += row.stddev;
    sxx += x * x;
    sxy += x * row.stddev;
    ++n;
  }
  SpreadFit fit;
  fit.window_lo = lo;
  fit.window_hi = hi;
  if (n >= 2) {
    const double denom = static_cast<double>(n) * sxx - sx * sx;
    fit.slope = (static_cast<double>(n) * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / static_cast<double>(n);
    double ss_res = 0.0;
    double ss_tot = 0.0;
    const double y_mean = sy / static_cast<double>(n);
    for (const SpreadRow& row : series.rows) {
      if (row.t < lo || row.t > hi) {
        continue;
      }
      const double x = static_cast<double>(row.t);
      const double pred = fit.slope * x + fit.intercept;
      ss_res += (row.stddev - pred) * (row.stddev - pred);
      ss_tot += (row.stddev - y_mean) * (row.stddev - y_mean);
    }
    fit.r2 = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : (ss_res == 0.0 ? 1.0 : 0.0);
  }
  series.fit = fit;
  return series;
}

void emit_csv(const Distribution& d, const std::filesystem::path& path) {
  std::ostringstream os;
  if (d.dims == 2) {
    os << "x,y,probability\n";
    for (const auto& [coord, p] : d.support) {
      os << coord.x << "," << coord.y << "," << format_double(p) << "\n";
    }
  } else {
    os << "position,probability\n";
    for (const auto& [coord, p] : d.support) {
      os << coord.x << "," << format_double(p) << "\n";
    }
  }
  write_text_atomically(path, os.str());
}

void emit_csv(const SpreadSeries& s, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "t,mean,stddev\n";
  for (const SpreadRow& row : s.rows) {
    os << row.t << "," << format_double(row.mean) << ","
       << format_double(row.stddev) << "\n";
  }
  write_text_atomically(path, os.str());
}

void emit_csv(const EquivalenceReport& r, const std::filesystem::path& path) {
  std::ostringstream os;
  os << "t,max_deviation,sector_leakage\n";
  for (const EquivalenceRow& row : r.rows) {
    os << row.t << "," << format_double(row.max_deviation) << ","
       << format_double(row.leakage) << "\n";
  }
  write_text_atomically(path, os.str());
}

}  // namespace qlgasim
