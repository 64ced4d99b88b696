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

#ifndef SPOOFLAB_EXPERIMENTS_HPP
#define SPOOFLAB_EXPERIMENTS_HPP

#include "spooflab/radar_receiver.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spooflab {

/// CSV document: `# key: value` metadata lines, one header row, data rows.
/// Fields never contain commas or quotes, so no quoting is needed.
struct CsvTable {
  std::vector<std::string> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const;
  void write(const std::string& path) const;
};

// Fixed formatting so repeated runs are byte-identical.
std::string format_power(double mw);      // %.9e
std::string format_angle(double degrees); // %.4f
std::string format_length(double m);      // %.4f

/// Metadata lines describing the scenario, shared by all experiments.
std::vector<std::string> scenario_metadata(const Scenario& scenario);

// ---------------------------------------------------------------- AoA scan

struct AoaScanResult {
  BaselineKind kind;
  SpectrumScan scan;
  std::string status = "ok";  // "infeasible" when the solver failed; scan is then empty
};

/// Epoch-averaged Bartlett scans, one per kind. Optimized kinds are solved
/// once on the scenario threshold before the epochs run.
std::vector<AoaScanResult> run_aoa_scan(const Scenario& scenario,
                                        std::span<const BaselineKind> kinds, std::uint64_t seed,
                                        const ScanConfig& config = {},
                                        const SolverSettings& settings = {});

/// Columns kind, angle_deg, power_mw, peak, status. Every kind contributes
/// one row per grid angle, including failed kinds (power "nan").
CsvTable aoa_scan_table(const std::vector<AoaScanResult>& results, const Scenario& scenario,
                        const ScanConfig& config, std::uint64_t seed);

// ------------------------------------------------------------- sweeps

struct ExperimentRow {
  double sweep_value = 0.0;
  BaselineKind solver = BaselineKind::OptimizedMm;
  double p_target = 0.0;   // mW
  double p_clutter = 0.0;  // mW
  int iterations = 0;
  std::uint64_t seed = 0;
  std::string status = "ok";
};

std::vector<double> default_gamma_grid();  // 1e-8, 3e-8, 1e-7, 3e-7, 1e-6 mW

/// Solves each (gamma, kind) pair and reports the closed-form powers at the
/// solver's theta. Baseline kinds are evaluated without optimization and
/// flagged "above_threshold" when P_T > gamma.
std::vector<ExperimentRow> run_gamma_sweep(const Scenario& scenario,
                                           std::span<const double> gammas,
                                           std::span<const BaselineKind> kinds,
                                           std::uint64_t seed,
                                           const SolverSettings& settings = {});

CsvTable gamma_sweep_table(const std::vector<ExperimentRow>& rows, const Scenario& scenario,
                           std::uint64_t seed);

struct Point2 {
  double x = 0.0;  // m, horizontal
  double z = 0.0;  // m, height
};

/// Positions in the vertical plane containing radar, target and clutter.
/// The radar sits at the origin with broadside +z; the IRS faces the radar
/// with its normal along -z and its local x-axis along global -x.
struct GeometryLayout {
  Point2 radar;
  Point2 target;
  Point2 clutter;
};

GeometryLayout derive_layout(const Scenario& scenario);

/// Radar-clutter angle difference seen from the IRS, degrees:
/// theta_RI + theta_CI for azimuths (pi, 0), theta_CI - theta_RI for (pi, pi).
/// Throws UnsupportedLayout for any other azimuth combination.
double compute_delta_diff(const Scenario& scenario);

/// Scenario with the clutter slid along x (height fixed) so that the angle
/// difference equals delta_deg. Far side (delta >= theta_RI) uses azimuth 0,
/// radar side uses azimuth pi. nullopt when no x position realizes delta.
std::optional<Scenario> scenario_for_delta(const Scenario& base, double delta_deg);

struct DeltaSweepRow {
  double delta_deg = 0.0;
  std::optional<Scenario> scenario;  // empty when unreachable
  GeometryLayout layout;
  ExperimentRow result;
};

std::vector<double> default_delta_grid();  // 5, 10, ..., 85 degrees

/// Re-solves the MM design at every reachable delta.
std::vector<DeltaSweepRow> run_angle_diff_sweep(const Scenario& scenario,
                                                std::span<const double> deltas,
                                                std::uint64_t seed,
                                                const SolverSettings& settings = {});

CsvTable angle_diff_table(const std::vector<DeltaSweepRow>& rows, const Scenario& scenario,
                          std::uint64_t seed);

// ------------------------------------------------------------- single solve

/// MM and SDR on the scenario threshold, one row each.
CsvTable run_solve(const Scenario& scenario, std::uint64_t seed,
                   const SolverSettings& settings = {});

}  // namespace spooflab

#endif
