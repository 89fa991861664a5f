// Copyright 2026 The entgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "entgen/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Entanglement generation analysis for bipartite Lindblad dynamics"};
  app.require_subcommand(1);

  std::string model_path, state_spec, scan_path, out_path;
  double t_max = 0.5;
  int steps = 100;
  int budget = 32;
  std::uint64_t seed = 1;
  double tol_minor = 1e-9;

  auto add_common = [&](CLI::App* cmd, bool needs_state) {
    cmd->add_option("--model", model_path, "model file (JSON)")->required();
    if (needs_state)
      cmd->add_option("--state", state_spec,
                      "product state: digit string like \"00\" or JSON");
    cmd->add_option("--out", out_path, "output file (default: stdout)");
  };

  CLI::App* validate = app.add_subcommand(
      "validate", "check complete positivity of the model");
  add_common(validate, false);

  CLI::App* witness = app.add_subcommand(
      "witness", "first-order verdict at a product state");
  add_common(witness, true);
  witness->add_option("--tol-minor", tol_minor, "marginality band scale");

  CLI::App* evolve = app.add_subcommand(
      "evolve", "negativity of the evolved state over a time grid (CSV)");
  add_common(evolve, true);
  evolve->add_option("--tmax", t_max, "largest evolution time");
  evolve->add_option("--steps", steps, "number of grid points");

  CLI::App* scan = app.add_subcommand(
      "scan", "two-parameter sweep driven by a scan file (CSV)");
  add_common(scan, false);
  scan->add_option("--scan", scan_path, "scan specification file (JSON)")
      ->required();
  scan->add_option("--seed", seed, "seed for state search");

  CLI::App* cap = app.add_subcommand(
      "capability", "entangling capability of the interaction Hamiltonian");
  add_common(cap, false);
  cap->add_option("--budget", budget, "multistart budget");
  cap->add_option("--seed", seed, "multistart seed");

  CLI11_PARSE(app, argc, argv);

  return entgen::run_guarded(
      [&]() -> int {
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!out_path.empty()) {
          file.open(out_path);
          if (!file)
            throw std::invalid_argument("cannot open output file: " + out_path);
          out = &file;
        }
        if (validate->parsed()) return entgen::cmd_validate(model_path, *out);
        if (witness->parsed()) {
          if (state_spec.empty())
            throw std::invalid_argument("witness: --state is required");
          return entgen::cmd_witness(model_path, state_spec, *out, tol_minor);
        }
        if (evolve->parsed()) {
          if (state_spec.empty())
            throw std::invalid_argument("evolve: --state is required");
          return entgen::cmd_evolve(model_path, state_spec, t_max, steps, *out);
        }
        if (scan->parsed())
          return entgen::cmd_scan(model_path, scan_path, *out, seed);
        if (cap->parsed())
          return entgen::cmd_capability(model_path, *out, budget, seed);
        return entgen::kExitUsage;
      },
      std::cerr);
}
