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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qlgasim/harness.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "qlgasim: history-dependent quantum walks and their lattice-gas "
      "formulation"};
  app.require_subcommand(1);

  std::string run_config;
  CLI::App* run = app.add_subcommand(
      "run", "Run the experiments in a JSON config, writing CSV outputs");
  run->add_option("config", run_config, "Path to the experiment config")
      ->required();

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a numerical verification suite");
  verify->add_option(
      "suite", suite,
      "Suite name: unitarity, conservation, equivalence, oracle, or all");

  std::string oracle_config;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Replay configured experiments against dense step operators");
  oracle->add_option("config", oracle_config, "Path to the experiment config")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // command-line misuse is a config error
  }

  if (run->parsed()) {
    return qlgasim::run_experiments(run_config, std::cout, std::cerr);
  }
  if (verify->parsed()) {
    return qlgasim::run_verify(suite, std::cout, std::cerr);
  }
  if (oracle->parsed()) {
    return qlgasim::run_oracle(oracle_config, std::cout, std::cerr);
  }
  return 1;  // unreachable given require_subcommand(1)
}
