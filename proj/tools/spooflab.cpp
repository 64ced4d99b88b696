// SPDX-License-Identifier: Apache-2.0
//
// spooflab: IRS-aided radar spoofing simulation and reflection design
// Copyright (C) 2026 The spooflab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line front end: one verb per experiment, CSV out.

#include "spooflab/errors.hpp"
#include "spooflab/experiments.hpp"
#include "spooflab/scenario_io.hpp"
#include "spooflab/validation.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

using namespace spooflab;

namespace {

constexpr int kExitError = 1;
constexpr int kExitChecksFailed = 3;

std::vector<BaselineKind> parse_kinds(const std::vector<std::string>& names) {
  std::vector<BaselineKind> kinds;
  for (const auto& n : names) kinds.push_back(parse_baseline_kind(n));
  return kinds;
}

void emit(const CsvTable& table, const std::string& out) {
  if (out.empty() || out == "-")
    std::cout << table.to_string();
  else
    table.write(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IRS-aided radar spoofing experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::uint64_t seed = 1;
  std::string out_path;
  app.add_option("--config", config_path, "scenario file (key = value); defaults apply when omitted")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "base seed for every random stream");
  app.add_option("--out", out_path, "CSV destination (stdout when omitted or '-')");

  auto* scan = app.add_subcommand("scan-aoa", "epoch-averaged angle scan per IRS configuration");
  std::vector<std::string> scan_kinds{"no_irs", "random_phase", "optimized_mm", "optimized_sdr"};
  ScanConfig scan_cfg;
  scan->add_option("--kinds", scan_kinds, "configurations to scan")->delimiter(',');
  scan->add_option("--epochs", scan_cfg.epochs, "epochs averaged per scan")->check(CLI::PositiveNumber);

  auto* gamma = app.add_subcommand("sweep-gamma", "solver powers versus detection threshold");
  std::vector<double> gammas = default_gamma_grid();
  std::vector<std::string> gamma_kinds{"optimized_mm", "optimized_sdr"};
  gamma->add_option("--gammas", gammas, "thresholds in mW")->delimiter(',');
  gamma->add_option("--kinds", gamma_kinds, "solvers or baselines to evaluate")->delimiter(',');

  auto* delta = app.add_subcommand("sweep-delta", "clutter power versus radar-clutter angle difference");
  std::vector<double> deltas = default_delta_grid();
  delta->add_option("--deltas", deltas, "angle differences in degrees")->delimiter(',');

  auto* solve = app.add_subcommand("solve", "single MM and SDR solve on the scenario threshold");

  auto* validate = app.add_subcommand("validate", "run the oracle suites");
  std::vector<int> only;
  validate->add_option("--only", only, "check ids (1-10) to run")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    const Scenario scenario = load_scenario(config_path);
    if (*scan) {
      const auto results = run_aoa_scan(scenario, parse_kinds(scan_kinds), seed, scan_cfg);
      emit(aoa_scan_table(results, scenario, scan_cfg, seed), out_path);
    } else if (*gamma) {
      const auto rows = run_gamma_sweep(scenario, gammas, parse_kinds(gamma_kinds), seed);
      emit(gamma_sweep_table(rows, scenario, seed), out_path);
    } else if (*delta) {
      emit(angle_diff_table(run_angle_diff_sweep(scenario, deltas, seed), scenario, seed), out_path);
    } else if (*solve) {
      emit(run_solve(scenario, seed), out_path);
    } else if (*validate) {
      const auto results = run_validation(scenario, seed, only);
      emit(validation_table(results, seed), out_path);
      bool all = true;
      for (const auto& r : results) {
        std::cerr << "check " << r.id << " " << r.name << ": " << (r.passed ? "PASS" : "FAIL")
                  << " (" << r.detail << ")\n";
        all = all && r.passed;
      }
      if (!all) return kExitChecksFailed;
    }
  } catch (const ParseError& e) {
    std::cerr << "spooflab: config error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "spooflab: error: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
