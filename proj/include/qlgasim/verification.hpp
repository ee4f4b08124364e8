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

#ifndef QLGASIM_VERIFICATION_HPP
#define QLGASIM_VERIFICATION_HPP

#include <string>
#include <vector>

namespace qlgasim {

/// Outcome of one self-contained numerical check.  `detail` carries the worst
/// observed numbers so a failure report is actionable without a rerun.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Every scattering operator the library constructs is unitary to 1e-12 in
/// the max-norm of U†U - I: coins across an angle sweep, the four-direction
/// scatterer family, velocity-history memory/ricochet factors and their
/// products, site-memory factors and their product, the direction swap, and
/// randomly sampled zero-diagonal direction coins.
CheckResult acceptance_unitarity();

/// Evolving random single-particle lattice-gas states for 100 steps leaks no
/// amplitude (above 1e-12) out of the one-particle sector, and the
/// all-quiescent configuration is exactly fixed, for every rule family.
CheckResult acceptance_sector_conservation();

/// Each walk is the single-particle sector of its lattice-gas rule: four
/// model pairs, ten random initial states each, 30 steps, amplitudes equal
/// within 1e-10 with no global-phase allowance.
CheckResult acceptance_equivalence();

/// The sparse walk step agrees with an independently constructed dense
/// operator on every basis vector to 1e-12, for all five walk families.
CheckResult acceptance_dense_oracle();

/// The velocity-history memory operator permutes the single-occupancy basis
/// (occupied-side tail x unoccupied-side tail x side choice) with unit
/// amplitudes, for tail lengths 1..3.
CheckResult acceptance_memory_permutation();

/// Direction-coin structure: a non-repeating coin never returns the current
/// direction (zero diagonal) and its non-reversing partner never returns the
/// opposite direction, across 50 random zero-diagonal unitaries.
CheckResult acceptance_direction_structure();

/// The balanced-coin walk from the symmetric initial state spreads
/// ballistically: stddev vs t is linear over [50, 200] with r^2 > 0.999 and
/// stddev(200)/stddev(100) within [1.9, 2.1].  The slope is reported, not
/// asserted.
CheckResult acceptance_ballistic_spread();

/// Norm is conserved to 1e-9 over 200 steps for all five walk families.
CheckResult acceptance_norm_conservation();

/// Two harness runs of the same experiment config produce byte-identical
/// output files (CSV and summary).
CheckResult acceptance_reproducibility();

struct AcceptanceReport {
  std::vector<CheckResult> checks;
  bool all_passed = false;
};

/// Runs every acceptance check in a fixed order.
AcceptanceReport run_acceptance();

/// Runs a named subset: "unitarity" (operator structure), "conservation"
/// (sector + norm), "equivalence", "oracle", or "all".  Throws ConfigError
/// for unknown suite names.
AcceptanceReport run_suite(const std::string& suite);

}  // namespace qlgasim

#endif
