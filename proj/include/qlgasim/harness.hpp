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

#ifndef QLGASIM_HARNESS_HPP
#define QLGASIM_HARNESS_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

namespace qlgasim {

/// Exit codes shared by all entry points:
///   0 success, 1 configuration error, 2 numerical check failed, 3 I/O error.

/// Runs every experiment in the config file, writing CSV outputs plus a
/// machine-readable summary.json into the configured output directory.  The
/// QLGASIM_OUTPUT_DIR environment variable, when set and non-empty, overrides
/// the config's output_dir.
int run_experiments(const std::filesystem::path& config_path, std::ostream& out,
                    std::ostream& err);

/// Runs a named verification suite (see run_suite) and prints one PASS/FAIL
/// line per check.
int run_verify(const std::string& suite, std::ostream& out, std::ostream& err);

/// Replays every configured experiment against an independently built dense
/// step operator and reports the largest amplitude deviation.  Infinite 1D
/// lattices are compared on a window wide enough that the support never
/// reaches the seam; a 2D experiment must configure a torus.
int run_oracle(const std::filesystem::path& config_path, std::ostream& out,
               std::ostream& err);

}  // namespace qlgasim

#endif
