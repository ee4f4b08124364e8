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

#include "qlgasim/experiment_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qlgasim/errors.hpp"
#include "qlgasim/operators.hpp"

namespace qlgasim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
  throw ConfigError(path, reason);
}

std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

const json& require_object(const json& v, const std::string& path) {
  if (!v.is_object()) {
    fail(path, "expected an object");
  }
  return v;
}

void check_keys(const json& o, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : o.items()) {
    (void)value;
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) {
      fail(child(path, key), "unknown field");
    }
  }
}

const json* find(const json& o, const char* key) {
  const auto it = o.find(key);
  return it == o.end() ? nullptr : &*it;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) {
    fail(path, "expected a number");
  }
  const double d = v.get<double>();
  if (!std::isfinite(d)) {
    fail(path, "must be finite");
  }
  return d;
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) {
    fail(path, "expected an integer");
  }
  return v.get<std::int64_t>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) {
    fail(path, "expected a string");
  }
  return v.get<std::string>();
}

LocalUnitary as_matrix(const json& v, const std::string& path, std::size_t dim) {
  if (!v.is_array() || v.size() != dim * dim) {
    std::ostringstream os;
    os << "expected " << dim * dim << " row-major [re, im] pairs";
    fail(path, os.str());
  }
  std::vector<Amplitude> entries;
  entries.reserve(dim * dim);
  for (const json& e : v) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      fail(path, "each entry must be an [re, im] pair of numbers");
    }
    entries.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  try {
    return LocalUnitary(dim, std::move(entries));
  } catch (const Error& err) {
    fail(path, err.what());
  }
}

Lattice parse_lattice(const json& v, const std::string& path, bool two_d) {
  require_object(v, path);
  check_keys(v, path, {"kind", "n_sites", "size_x", "size_y"});
  const json* kind = find(v, "kind");
  if (kind == nullptr) {
    fail(child(path, "kind"), "missing");
  }
  const std::string k = as_string(*kind, child(path, "kind"));
  if (k == "line") {
    if (two_d) {
      fail(child(path, "kind"), "a 2D walk needs plane or torus");
    }
    return Lattice::line();
  }
  if (k == "ring") {
    if (two_d) {
      fail(child(path, "kind"), "a 2D walk needs plane or torus");
    }
    const json* n = find(v, "n_sites");
    if (n == nullptr) {
      fail(child(path, "n_sites"), "missing (ring size)");
    }
    const std::int64_t sites = as_int(*n, child(path, "n_sites"));
    if (sites < 2 || sites > 1000000) {
      fail(child(path, "n_sites"), "must be between 2 and 1000000");
    }
    return Lattice::ring(sites);
  }
  if (k == "plane") {
    if (!two_d) {
      fail(child(path, "kind"), "a 1D walk needs line or ring");
    }
    return Lattice::plane();
  }
  if (k == "torus") {
    if (!two_d) {
      fail(child(path, "kind"), "a 1D walk needs line or ring");
    }
    const json* sx = find(v, "size_x");
    const json* sy = find(v, "size_y");
    if (sx == nullptr || sy == nullptr) {
      fail(path, "torus needs size_x and size_y");
    }
    const std::int64_t nx = as_int(*sx, child(path, "size_x"));
    const std::int64_t ny = as_int(*sy, child(path, "size_y"));
    if (nx < 2 || ny < 2 || nx > 10000 || ny > 10000) {
      fail(path, "torus sizes must be between 2 and 10000");
    }
    return Lattice::torus(nx, ny);
  }
  fail(child(path, "kind"), "must be line, ring, plane, or torus");
}

void parse_model(const json& v, const std::string& path, ExperimentSpec& spec) {
  require_object(v, path);
  const json* kind = find(v, "kind");
  if (kind == nullptr) {
    fail(child(path, "kind"), "missing");
  }
  const std::string k = as_string(*kind, child(path, "kind"));

  if (k == "standard") {
    check_keys(v, path, {"kind", "theta"});
    const json* theta = find(v, "theta");
    if (theta == nullptr) {
      fail(child(path, "theta"), "missing");
    }
    spec.kind = WalkKind::standard;
    spec.params = StandardParams{as_number(*theta, child(path, "theta"))};
    return;
  }

  if (k == "particle_history") {
    check_keys(v, path, {"kind", "history_len", "variant", "thetas"});
    const json* len = find(v, "history_len");
    const json* variant = find(v, "variant");
    const json* thetas = find(v, "thetas");
    if (len == nullptr) {
      fail(child(path, "history_len"), "missing");
    }
    if (thetas == nullptr) {
      fail(child(path, "thetas"), "missing");
    }
    const std::int64_t n = as_int(*len, child(path, "history_len"));
    if (n < 1 || n > 20) {
      fail(child(path, "history_len"), "must be between 1 and 20");
    }
    HistoryVariant hv = HistoryVariant::uniform;
    if (variant != nullptr) {
      const std::string vs = as_string(*variant, child(path, "variant"));
      if (vs == "uniform") {
        hv = HistoryVariant::uniform;
      } else if (vs == "cycled") {
        hv = HistoryVariant::cycled;
      } else {
        fail(child(path, "variant"), "must be uniform or cycled");
      }
    }
    if (!thetas->is_array() || thetas->empty()) {
      fail(child(path, "thetas"), "expected a non-empty array of angles");
    }
    const std::size_t expected =
        (hv == HistoryVariant::uniform) ? 1 : static_cast<std::size_t>(n);
    if (thetas->size() != expected) {
      std::ostringstream os;
      os << "needs exactly " << expected << " angle(s) for this variant";
      fail(child(path, "thetas"), os.str());
    }
    ParticleHistoryParams p;
    p.history_len = static_cast<std::uint32_t>(n);
    p.variant = hv;
    for (std::size_t i = 0; i < thetas->size(); ++i) {
      p.thetas.push_back(as_number((*thetas)[i], child(path, "thetas")));
    }
    spec.kind = WalkKind::particle_history;
    spec.params = std::move(p);
    return;
  }

  if (k == "mcgettrick") {
    check_keys(v, path, {"kind", "history_len", "theta_s", "u_s", "mode0", "mode1"});
    const json* len = find(v, "history_len");
    if (len == nullptr) {
      fail(child(path, "history_len"), "missing");
    }
    const std::int64_t n = as_int(*len, child(path, "history_len"));
    if (n < 1 || n > 20) {
      fail(child(path, "history_len"), "must be between 1 and 20");
    }
    const json* theta_s = find(v, "theta_s");
    const json* u_s = find(v, "u_s");
    if ((theta_s == nullptr) == (u_s == nullptr)) {
      fail(path, "provide exactly one of theta_s or u_s");
    }
    LocalUnitary control =
        (theta_s != nullptr)
            ? symmetric_coin(as_number(*theta_s, child(path, "theta_s")))
            : as_matrix(*u_s, child(path, "u_s"), 2);
    auto parse_mode = [&](const char* key, RicochetMode fallback) {
      const json* m = find(v, key);
      if (m == nullptr) {
        return fallback;
      }
      const std::string s = as_string(*m, child(path, key));
      if (s == "transmit") {
        return RicochetMode::transmit;
      }
      if (s == "reflect") {
        return RicochetMode::reflect;
      }
      fail(child(path, key), "must be transmit or reflect");
    };
    McGettrickParams p{static_cast<std::uint32_t>(n), std::move(control),
                       parse_mode("mode0", RicochetMode::transmit),
                       parse_mode("mode1", RicochetMode::reflect)};
    spec.kind = WalkKind::mcgettrick;
    spec.params = std::move(p);
    return;
  }

  if (k == "site_history") {
    check_keys(v, path, {"kind", "n_sites", "theta_m", "theta_b"});
    const json* n = find(v, "n_sites");
    const json* tm = find(v, "theta_m");
    const json* tb = find(v, "theta_b");
    if (n == nullptr) {
      fail(child(path, "n_sites"), "missing");
    }
    if (tm == nullptr) {
      fail(child(path, "theta_m"), "missing");
    }
    if (tb == nullptr) {
      fail(child(path, "theta_b"), "missing");
    }
    const std::int64_t sites = as_int(*n, child(path, "n_sites"));
    if (sites < 2 || sites > 64) {
      fail(child(path, "n_sites"), "must be between 2 and 64");
    }
    spec.kind = WalkKind::site_history;
    spec.params = SiteHistoryParams{static_cast<std::uint32_t>(sites),
                                    as_number(*tm, child(path, "theta_m")),
                                    as_number(*tb, child(path, "theta_b"))};
    return;
  }

  if (k == "two_d") {
    check_keys(v, path, {"kind", "variant", "c_matrix"});
    const json* variant = find(v, "variant");
    const json* c = find(v, "c_matrix");
    if (variant == nullptr) {
      fail(child(path, "variant"), "missing");
    }
    if (c == nullptr) {
      fail(child(path, "c_matrix"), "missing");
    }
    const std::string vs = as_string(*variant, child(path, "variant"));
    TwoDVariant tv;
    if (vs == "non_repeating") {
      tv = TwoDVariant::non_repeating;
    } else if (vs == "non_reversing") {
      tv = TwoDVariant::non_reversing;
    } else {
      fail(child(path, "variant"), "must be non_repeating or non_reversing");
    }
    LocalUnitary cm = as_matrix(*c, child(path, "c_matrix"), 4);
    if (!has_zero_diagonal(cm, 1e-12)) {
      fail(child(path, "c_matrix"), "diagonal entries must all be zero");
    }
    TwoDParams p{tv, tv == TwoDVariant::non_repeating
                         ? cm
                         : cm.compose_after(direction_swap())};
    spec.kind = WalkKind::two_d;
    spec.params = std::move(p);
    return;
  }

  fail(child(path, "kind"),
       "must be standard, particle_history, mcgettrick, site_history, or two_d");
}

void parse_initial_state(const json& v, const std::string& path,
                         ExperimentSpec& spec) {
  require_object(v, path);
  check_keys(v, path, {"kind", "position", "velocity", "direction", "control",
                       "tail", "memory"});
  InitialStateSpec& init = spec.initial_state;

  if (const json* kind = find(v, "kind")) {
    const std::string s = as_string(*kind, child(path, "kind"));
    if (s == "basis") {
      init.kind = InitialStateSpec::Kind::basis;
    } else if (s == "symmetric") {
      init.kind = InitialStateSpec::Kind::symmetric;
    } else {
      fail(child(path, "kind"), "must be basis or symmetric");
    }
  }
  if (init.kind == InitialStateSpec::Kind::symmetric &&
      spec.kind != WalkKind::standard) {
    fail(child(path, "kind"),
         "the symmetric initial state is available for the standard walk only");
  }

  if (const json* pos = find(v, "position")) {
    if (spec.kind == WalkKind::two_d) {
      if (!pos->is_array() || pos->size() != 2) {
        fail(child(path, "position"), "2D walks take [x, y]");
      }
      init.x = as_int((*pos)[0], child(path, "position"));
      init.y = as_int((*pos)[1], child(path, "position"));
    } else {
      init.x = as_int(*pos, child(path, "position"));
    }
  }

  if (const json* vel = find(v, "velocity")) {
    const std::int64_t p = as_int(*vel, child(path, "velocity"));
    if (p != 1 && p != -1) {
      fail(child(path, "velocity"), "must be 1 or -1");
    }
    init.velocity = static_cast<int>(p);
  }

  if (const json* dir = find(v, "direction")) {
    if (spec.kind != WalkKind::two_d) {
      fail(child(path, "direction"), "only 2D walks take a direction");
    }
    const std::string s = as_string(*dir, child(path, "direction"));
    if (s == "w") {
      init.direction = 0;
    } else if (s == "e") {
      init.direction = 1;
    } else if (s == "s") {
      init.direction = 2;
    } else if (s == "n") {
      init.direction = 3;
    } else {
      fail(child(path, "direction"), "must be w, e, s, or n");
    }
  }

  if (const json* ctrl = find(v, "control")) {
    if (spec.kind != WalkKind::mcgettrick) {
      fail(child(path, "control"), "only controlled-history walks take a control bit");
    }
    const std::int64_t c = as_int(*ctrl, child(path, "control"));
    if (c != 0 && c != 1) {
      fail(child(path, "control"), "must be 0 or 1");
    }
    init.control = static_cast<std::uint8_t>(c);
  }

  if (const json* tail = find(v, "tail")) {
    std::uint32_t history_len = 0;
    if (const auto* ph = std::get_if<ParticleHistoryParams>(&spec.params)) {
      history_len = ph->history_len;
    } else if (const auto* mg = std::get_if<McGettrickParams>(&spec.params)) {
      history_len = mg->history_len;
    } else {
      fail(child(path, "tail"), "only history walks take a velocity tail");
    }
    if (!tail->is_array() || tail->size() != history_len) {
      std::ostringstream os;
      os << "needs exactly " << history_len << " entries of +1 or -1";
      fail(child(path, "tail"), os.str());
    }
    init.tail.clear();
    for (const json& e : *tail) {
      const std::int64_t p = as_int(e, child(path, "tail"));
      if (p != 1 && p != -1) {
        fail(child(path, "tail"), "entries must be 1 or -1");
      }
      init.tail.push_back(static_cast<int>(p));
    }
  }

  if (const json* mem = find(v, "memory")) {
    const auto* sh = std::get_if<SiteHistoryParams>(&spec.params);
    if (sh == nullptr) {
      fail(child(path, "memory"), "only site-memory walks take a memory register");
    }
    if (!mem->is_array() || mem->size() != sh->n_sites) {
      std::ostringstream os;
      os << "needs exactly " << sh->n_sites << " bits";
      fail(child(path, "memory"), os.str());
    }
    init.memory = 0;
    for (std::size_t i = 0; i < mem->size(); ++i) {
      const std::int64_t b = as_int((*mem)[i], child(path, "memory"));
      if (b != 0 && b != 1) {
        fail(child(path, "memory"), "entries must be 0 or 1");
      }
      if (b == 1) {
        init.memory |= 1ull << i;
      }
    }
  }

  // Range checks against the lattice.
  if (spec.kind == WalkKind::site_history) {
    const auto& sh = std::get<SiteHistoryParams>(spec.params);
    if (init.x < 0 || init.x >= static_cast<std::int64_t>(sh.n_sites)) {
      fail(child(path, "position"), "must lie in [0, n_sites)");
    }
  } else if (spec.lattice.finite()) {
    const Coord c{init.x, spec.kind == WalkKind::two_d ? init.y : 0};
    if (!(spec.lattice.wrap(c) == c)) {
      fail(child(path, "position"), "must lie inside the finite lattice");
    }
  }
}

OutputKind parse_output_kind(const json& v, const std::string& path) {
  const std::string s = as_string(v, path);
  if (s == "distribution_per_step") {
    return OutputKind::distribution_per_step;
  }
  if (s == "spread_series") {
    return OutputKind::spread_series;
  }
  if (s == "equivalence_report") {
    return OutputKind::equivalence_report;
  }
  fail(path, "must be distribution_per_step, spread_series, or equivalence_report");
}

ExperimentSpec parse_experiment(const json& o, const std::string& path) {
  require_object(o, path);
  check_keys(o, path,
             {"name", "model", "lattice", "representation", "initial_state",
              "t_max", "prune_epsilon", "equivalence_tol", "outputs", "seed"});
  ExperimentSpec spec;

  if (const json* name = find(o, "name")) {
    spec.name = as_string(*name, child(path, "name"));
    if (spec.name.empty() ||
        spec.name.find_first_not_of("abcdefghijklmnopqrstuvwxyz"
                                    "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_-") !=
            std::string::npos) {
      fail(child(path, "name"),
           "must be non-empty and use only letters, digits, '_', '-'");
    }
  }

  const json* model = find(o, "model");
  if (model == nullptr) {
    fail(child(path, "model"), "missing");
  }
  parse_model(*model, child(path, "model"), spec);

  const bool two_d = (spec.kind == WalkKind::two_d);
  if (const json* lattice = find(o, "lattice")) {
    if (spec.kind == WalkKind::site_history) {
      fail(child(path, "lattice"), "site-memory walks fix their own ring");
    }
    spec.lattice = parse_lattice(*lattice, child(path, "lattice"), two_d);
  } else {
    spec.lattice = two_d ? Lattice::plane() : Lattice::line();
    if (spec.kind == WalkKind::site_history) {
      spec.lattice = Lattice::ring(
          std::get<SiteHistoryParams>(spec.params).n_sites);
    }
  }

  if (const json* rep = find(o, "representation")) {
    const std::string s = as_string(*rep, child(path, "representation"));
    if (s == "qrw") {
      spec.representation = Representation::qrw;
    } else if (s == "qlga") {
      spec.representation = Representation::qlga;
    } else if (s == "both") {
      spec.representation = Representation::both;
    } else {
      fail(child(path, "representation"), "must be qrw, qlga, or both");
    }
  }
  if (spec.kind == WalkKind::mcgettrick &&
      spec.representation != Representation::qrw) {
    fail(child(path, "representation"),
         "the controlled-history walk has no lattice-gas counterpart");
  }

  if (const json* t = find(o, "t_max")) {
    const std::int64_t n = as_int(*t, child(path, "t_max"));
    if (n < 1 || n > 100000) {
      fail(child(path, "t_max"), "must be between 1 and 100000");
    }
    spec.t_max = static_cast<std::uint64_t>(n);
  }

  if (const json* eps = find(o, "prune_epsilon")) {
    const double e = as_number(*eps, child(path, "prune_epsilon"));
    if (e < 0.0 || e >= 1.0) {
      fail(child(path, "prune_epsilon"), "must lie in [0, 1)");
    }
    spec.prune_epsilon = e;
  }

  if (const json* tol = find(o, "equivalence_tol")) {
    const double e = as_number(*tol, child(path, "equivalence_tol"));
    if (!(e > 0.0)) {
      fail(child(path, "equivalence_tol"), "must be positive");
    }
    spec.equivalence_tol = e;
  }

  if (const json* outputs = find(o, "outputs")) {
    if (!outputs->is_array() || outputs->empty()) {
      fail(child(path, "outputs"), "expected a non-empty array");
    }
    for (const json& e : *outputs) {
      spec.outputs.push_back(parse_output_kind(e, child(path, "outputs")));
    }
  } else {
    spec.outputs.push_back(OutputKind::distribution_per_step);
  }
  for (OutputKind k : spec.outputs) {
    if (k == OutputKind::equivalence_report &&
        spec.representation != Representation::both) {
      fail(child(path, "outputs"),
           "equivalence_report needs representation \"both\"");
    }
    if (k == OutputKind::spread_series && two_d) {
      fail(child(path, "outputs"),
           "spread_series is defined for one-dimensional walks");
    }
  }

  if (const json* seed = find(o, "seed")) {
    const std::int64_t s = as_int(*seed, child(path, "seed"));
    if (s < 0) {
      fail(child(path, "seed"), "must be non-negative");
    }
    spec.seed = static_cast<std::uint64_t>(s);
  }

  if (const json* init = find(o, "initial_state")) {
    parse_initial_state(*init, child(path, "initial_state"), spec);
  } else if (spec.kind == WalkKind::site_history ||
             spec.lattice.kind() == Lattice::Kind::torus) {
    // Defaults (origin) are valid for every lattice this code accepts.
    const Coord c{0, 0};
    (void)c;
  }

  // Matrix-bearing models: surface builder-level validation as config errors.
  try {
    (void)build_model(spec);
  } catch (const Error& e) {
    fail(child(path, "model"), e.what());
  }
  return spec;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("document", std::string("not valid JSON: ") + e.what());
  }
  require_object(doc, "document");

  ExperimentConfig config;
  if (const json* dir = find(doc, "output_dir")) {
    config.output_dir = as_string(*dir, "output_dir");
    if (config.output_dir.empty()) {
      fail("output_dir", "must be non-empty");
    }
  }

  if (const json* experiments = find(doc, "experiments")) {
    check_keys(doc, "", {"output_dir", "experiments"});
    if (!experiments->is_array() || experiments->empty()) {
      fail("experiments", "expected a non-empty array");
    }
    for (std::size_t i = 0; i < experiments->size(); ++i) {
      std::ostringstream os;
      os << "experiments[" << i << "]";
      config.experiments.push_back(parse_experiment((*experiments)[i], os.str()));
    }
  } else {
    json experiment = doc;
    experiment.erase("output_dir");
    config.experiments.push_back(parse_experiment(experiment, ""));
  }

  // Distinct experiment names keep output files from clobbering each other.
  for (std::size_t i = 0; i < config.experiments.size(); ++i) {
    for (std::size_t j = i + 1; j < config.experiments.size(); ++j) {
      if (config.experiments[i].name == config.experiments[j].name) {
        fail("experiments", "duplicate experiment name: " +
                                config.experiments[i].name);
      }
    }
  }
  return config;
}

ExperimentConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read config file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw IoError("cannot read config file: " + path.string());
  }
  return parse_config_text(buffer.str());
}

WalkModel build_model(const ExperimentSpec& spec) {
  switch (spec.kind) {
    case WalkKind::standard: {
      const auto& p = std::get<StandardParams>(spec.params);
      return build_standard(p.theta, spec.lattice);
    }
    case WalkKind::particle_history: {
      const auto& p = std::get<ParticleHistoryParams>(spec.params);
      return build_particle_history(static_cast<int>(p.history_len), p.thetas,
                                    p.variant, spec.lattice);
    }
    case WalkKind::mcgettrick: {
      const auto& p = std::get<McGettrickParams>(spec.params);
      return build_mcgettrick(static_cast<int>(p.history_len), p.u_s, p.mode0,
                              p.mode1, spec.lattice);
    }
    case WalkKind::site_history: {
      const auto& p = std::get<SiteHistoryParams>(spec.params);
      return build_site_history(static_cast<int>(p.n_sites), p.theta_m, p.theta_b);
    }
    case WalkKind::two_d: {
      const auto& p = std::get<TwoDParams>(spec.params);
      // u_b already carries the direction swap when the variant asks for it.
      return WalkModel(WalkKind::two_d, p, spec.lattice);
    }
  }
  throw Error("unknown walk kind");  // unreachable
}

WalkState build_initial_state(const ExperimentSpec& spec) {
  const InitialStateSpec& init = spec.initial_state;
  WalkState state(spec.prune_epsilon);

  if (init.kind == InitialStateSpec::Kind::symmetric) {
    const double inv_sqrt2 = 0.70710678118654752440;
    state.add(StandardLabel{init.x, 1}, Amplitude(inv_sqrt2, 0.0));
    state.add(StandardLabel{init.x, -1}, Amplitude(0.0, inv_sqrt2));
    return state;
  }

  auto tail_bits = [&](std::uint32_t history_len) {
    std::uint32_t tail = 0;
    for (std::size_t k = 0; k < init.tail.size() && k < history_len; ++k) {
      if (init.tail[k] == -1) {
        tail |= 1u << k;
      }
    }
    return tail;  // an omitted tail means all velocities +1
  };

  switch (spec.kind) {
    case WalkKind::standard:
      state.add(StandardLabel{init.x, init.velocity}, Amplitude(1.0, 0.0));
      break;
    case WalkKind::particle_history: {
      const auto& p = std::get<ParticleHistoryParams>(spec.params);
      state.add(ParticleHistoryLabel{init.x, p.history_len, tail_bits(p.history_len)},
                Amplitude(1.0, 0.0));
      break;
    }
    case WalkKind::mcgettrick: {
      const auto& p = std::get<McGettrickParams>(spec.params);
      state.add(McGettrickLabel{init.x, init.control, p.history_len,
                                tail_bits(p.history_len)},
                Amplitude(1.0, 0.0));
      break;
    }
    case WalkKind::site_history: {
      const auto& p = std::get<SiteHistoryParams>(spec.params);
      state.add(SiteHistoryLabel{init.x, init.velocity, p.n_sites, init.memory},
                Amplitude(1.0, 0.0));
      break;
    }
    case WalkKind::two_d:
      state.add(TwoDLabel{init.x, init.y, init.direction}, Amplitude(1.0, 0.0));
      break;
  }
  return state;
}

}  // namespace qlgasim
