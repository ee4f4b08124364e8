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

#include "qlgasim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlgasim/analysis.hpp"
#include "qlgasim/correspondence.hpp"
#include "qlgasim/dense_oracle.hpp"
#include "qlgasim/errors.hpp"
#include "qlgasim/experiment_config.hpp"
#include "qlgasim/verification.hpp"

namespace qlgasim {

namespace {

using nlohmann::json;

std::filesystem::path resolve_output_dir(const ExperimentConfig& config) {
  if (const char* env = std::getenv("QLGASIM_OUTPUT_DIR")) {
    if (*env != '\0') {
      return env;
    }
  }
  return config.output_dir;
}

const char* kind_name(WalkKind kind) {
  switch (kind) {
    case WalkKind::standard:
      return "standard";
    case WalkKind::particle_history:
      return "particle_history";
    case WalkKind::mcgettrick:
      return "mcgettrick";
    case WalkKind::site_history:
      return "site_history";
    case WalkKind::two_d:
      return "two_d";
  }
  return "unknown";
}

bool wants(const ExperimentSpec& spec, OutputKind kind) {
  return std::find(spec.outputs.begin(), spec.outputs.end(), kind) !=
         spec.outputs.end();
}

}  // namespace

int run_experiments(const std::filesystem::path& config_path, std::ostream& out,
                    std::ostream& err) {
  try {
    const ExperimentConfig config = parse_config_file(config_path);
    const std::filesystem::path out_dir = resolve_output_dir(config);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
      throw IoError("cannot create output directory " + out_dir.string() +
                    ": " + ec.message());
    }

    json summary;
    summary["experiments"] = json::array();
    bool equivalence_failed = false;

    for (const ExperimentSpec& spec : config.experiments) {
      const WalkModel model = build_model(spec);
      const WalkState init = build_initial_state(spec);

      json exp;
      exp["name"] = spec.name;
      exp["model"] = kind_name(spec.kind);
      exp["t_max"] = spec.t_max;
      json files = json::array();

      const bool want_qrw = spec.representation != Representation::qlga;
      const bool want_qlga = spec.representation != Representation::qrw;

      if (wants(spec, OutputKind::distribution_per_step)) {
        if (want_qrw) {
          WalkState s = init;
          for (std::uint64_t t = 0;; ++t) {
            const std::filesystem::path file =
                out_dir / (spec.name + "_qrw_distribution_t" +
                           std::to_string(t) + ".csv");
            emit_csv(position_distribution(s), file);
            files.push_back(file.filename().string());
            if (t == spec.t_max) {
              break;
            }
            s = model.step_at(s, t);
          }
        }
        if (want_qlga) {
          const Embedding emb = make_embedding(model);
          ConfigState c = embed(emb, init);
          for (std::uint64_t t = 0;; ++t) {
            const std::filesystem::path file =
                out_dir / (spec.name + "_qlga_distribution_t" +
                           std::to_string(t) + ".csv");
            emit_csv(position_distribution(c, emb.rule().spec()), file);
            files.push_back(file.filename().string());
            if (t == spec.t_max) {
              break;
            }
            c = global_step(c, emb.rule(), t);
          }
        }
      }

      if (wants(spec, OutputKind::spread_series)) {
        const SpreadSeries series = spread_series(model, init, spec.t_max);
        const std::filesystem::path file = out_dir / (spec.name + "_spread.csv");
        emit_csv(series, file);
        files.push_back(file.filename().string());
        json fit;
        fit["slope"] = series.fit.slope;
        fit["intercept"] = series.fit.intercept;
        fit["r2"] = series.fit.r2;
        exp["spread_fit"] = fit;
      }

      if (wants(spec, OutputKind::equivalence_report)) {
        const Embedding emb = make_embedding(model);
        const EquivalenceReport report = check_equivalence(
            model, emb, init, spec.t_max, spec.equivalence_tol);
        const std::filesystem::path file =
            out_dir / (spec.name + "_equivalence.csv");
        emit_csv(report, file);
        files.push_back(file.filename().string());
        json eq;
        eq["max_deviation"] = report.max_deviation;
        eq["max_leakage"] = report.max_leakage;
        eq["tol"] = report.tol;
        eq["passed"] = report.passed;
        exp["equivalence"] = eq;
        if (!report.passed) {
          equivalence_failed = true;
          err << "experiment " << spec.name
              << ": walk and lattice-gas evolutions deviate by "
              << format_double(report.max_deviation) << " (tol "
              << format_double(report.tol) << ")\n";
        }
      }

      exp["files"] = files;
      summary["experiments"].push_back(exp);
      out << "experiment " << spec.name << ": wrote " << files.size()
          << " file(s)\n";
    }

    write_text_atomically(out_dir / "summary.json", summary.dump(2) + "\n");
    out << "summary: " << (out_dir / "summary.json").string() << "\n";

    return equivalence_failed ? 2 : 0;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_verify(const std::string& suite, std::ostream& out, std::ostream& err) {
  try {
    const AcceptanceReport report = run_suite(suite);
    std::size_t passed = 0;
    for (const CheckResult& c : report.checks) {
      out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " -- " << c.detail
          << "\n";
      if (c.passed) {
        ++passed;
      }
    }
    out << passed << "/" << report.checks.size() << " checks passed\n";
    return report.all_passed ? 0 : 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run_oracle(const std::filesystem::path& config_path, std::ostream& out,
               std::ostream& err) {
  const double tol = 1e-12;
  try {
    const ExperimentConfig config = parse_config_file(config_path);
    bool all_ok = true;

    for (const ExperimentSpec& spec : config.experiments) {
      const WalkModel model = build_model(spec);
      const WalkState init = build_initial_state(spec);

      Lattice truncation = model.lattice();
      if (!truncation.finite()) {
        if (spec.kind == WalkKind::two_d) {
          throw ConfigError(spec.name + ".lattice",
                            "dense comparison on a plane needs a torus");
        }
        const std::int64_t reach =
            static_cast<std::int64_t>(spec.t_max) + 2;
        truncation = Lattice::ring_range(spec.initial_state.x - reach,
                                         spec.initial_state.x + reach);
      }

      std::unique_ptr<DenseWalkOracle> oracle;
      try {
        oracle = std::make_unique<DenseWalkOracle>(model, truncation);
      } catch (const Error& e) {
        throw ConfigError(spec.name, e.what());
      }

      WalkState s = init;
      std::vector<Amplitude> v = oracle->to_vector(init);
      double worst = 0.0;
      for (std::uint64_t t = 0; t < spec.t_max; ++t) {
        s = model.step_at(s, t);
        v = oracle->apply_step(v, t);
        const std::vector<Amplitude> sv = oracle->to_vector(s);
        for (std::size_t j = 0; j < v.size(); ++j) {
          worst = std::max(worst, std::abs(sv[j] - v[j]));
        }
      }

      out << "experiment " << spec.name << ": dim " << oracle->dim()
          << ", max deviation over " << spec.t_max
          << " step(s) = " << format_double(worst) << "\n";
      if (!(worst < tol)) {
        all_ok = false;
      }
    }

    out << (all_ok ? "dense-operator agreement OK\n"
                   : "dense-operator agreement FAILED\n");
    return all_ok ? 0 : 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qlgasim
