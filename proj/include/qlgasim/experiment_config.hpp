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

#ifndef QLGASIM_EXPERIMENT_CONFIG_HPP
#define QLGASIM_EXPERIMENT_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qlgasim/walk_model.hpp"

namespace qlgasim {

enum class Representation { qrw, qlga, both };

enum class OutputKind { distribution_per_step, spread_series, equivalence_report };

/// Declarative initial state.  `basis` is a single basis label; `symmetric`
/// is the equal superposition (|+1> + i|-1>)/sqrt(2) at the given position
/// (plain coined walk only).
struct InitialStateSpec {
  enum class Kind { basis, symmetric };
  Kind kind = Kind::basis;
  std::int64_t x = 0;
  std::int64_t y = 0;
  int velocity = 1;
  std::uint8_t direction = 1;  // (w, e, s, n) = (0, 1, 2, 3); default east
  std::uint8_t control = 0;
  std::vector<int> tail;   // +1/-1 per history slot, most recent first
  std::uint64_t memory = 0;  // bit k = visit marker of site k
};

/// One experiment: a fully validated model recipe plus evolution settings.
struct ExperimentSpec {
  std::string name = "experiment";
  WalkKind kind = WalkKind::standard;
  WalkParams params;
  Lattice lattice = Lattice::line();
  Representation representation = Representation::qrw;
  InitialStateSpec initial_state;
  std::uint64_t t_max = 10;
  double prune_epsilon = 0.0;
  double equivalence_tol = 1e-10;
  std::vector<OutputKind> outputs;
  std::uint64_t seed = 0;
};

struct ExperimentConfig {
  std::vector<ExperimentSpec> experiments;
  std::filesystem::path output_dir = "out";
};

/// Parses and validates a JSON config file.  Schema errors raise ConfigError
/// naming the offending field; unreadable files raise IoError.
ExperimentConfig parse_config_file(const std::filesystem::path& path);

/// Same, from an in-memory JSON document (document text, UTF-8).
ExperimentConfig parse_config_text(const std::string& text);

WalkModel build_model(const ExperimentSpec& spec);
WalkState build_initial_state(const ExperimentSpec& spec);

}  // namespace qlgasim

#endif
