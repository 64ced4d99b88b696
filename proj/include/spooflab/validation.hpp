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

#ifndef SPOOFLAB_VALIDATION_HPP
#define SPOOFLAB_VALIDATION_HPP

#include "spooflab/experiments.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace spooflab {

/// Outcome of one oracle suite. `detail` carries the measured quantities
/// against their limits so failures can be read off directly.
struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double elapsed_seconds = 0.0;
};

// Random instance generators shared with the unit tests.

/// Physically valid scenario with small arrays (2..6 per axis), arbitrary
/// directions and distances, and a threshold drawn as a log-uniform
/// fraction of N lambda_max(B).
Scenario random_scenario(std::mt19937_64& rng);

/// Rank-2 form with complex Gaussian factors of length n and log-uniform
/// weights in [1e-3, 1e3].
RankTwoForm random_rank2(std::mt19937_64& rng, int n);

/// Cascaded coefficients with i.i.d. uniform-phase g, v, r of length n and
/// log-uniform Q factors in [1e-3, 1].
CascadedCoefficients random_coefficients(std::mt19937_64& rng, int n);

struct SandwichInstance {
  QuadraticForms forms;
  double gamma = 0.0;
};

/// N = n instance whose threshold sits strictly inside the range of
/// theta^H B theta over the `levels`-level phase grid, so the discrete
/// problem is feasible and the constraint matters.
SandwichInstance random_sandwich_instance(std::mt19937_64& rng, int n, int levels);

// Oracle suites. Scenario-specific suites take the scenario explicitly.

/// Monte-Carlo echo powers against the closed forms for random theta.
CheckResult check_expectation_identity(const Scenario& scenario, std::uint64_t seed,
                                       int thetas = 10, int trials = 20000);

/// Feasibility of every MM iterate and a non-decreasing objective trace.
CheckResult check_mm_ascent(std::uint64_t seed, int scenarios = 50);

/// brute force <= SDP, MM <= SDP, MM >= 0.98 brute force at N = 4.
CheckResult check_bound_sandwich(std::uint64_t seed, int instances = 20);

/// MM P_C >= 0.9 SDR P_C and both P_T <= gamma on every row.
CheckResult check_solver_parity(const std::vector<ExperimentRow>& sweep);

/// MM P_C non-decreasing in gamma.
CheckResult check_tradeoff_monotonicity(const std::vector<ExperimentRow>& sweep);

/// Spectrum features of the optimized, no-IRS and random-phase scans.
CheckResult check_spoofing_scan(const Scenario& scenario, std::uint64_t seed);

/// P_C(5 deg) < P_C(30 deg) > P_C(80 deg) on the swept layout.
CheckResult check_angle_diff_shape(const Scenario& scenario, std::uint64_t seed);

/// Rank-2 lambda_max against a dense Hermitian eigensolve.
CheckResult check_lambda_max(std::uint64_t seed, int instances = 100);

/// ADMM residuals, diagonal and PSD-ness of the relaxed solution.
CheckResult check_admm_certificate(const Scenario& scenario);

/// Every experiment, run twice in-process on a reduced scenario, produces
/// the same CSV text.
CheckResult check_determinism(const Scenario& scenario, std::uint64_t seed);

inline constexpr int kCheckCount = 10;

/// Runs the requested suites (ids 1..10; empty = all) in id order. Suites 4
/// and 5 share one gamma sweep.
std::vector<CheckResult> run_validation(const Scenario& scenario, std::uint64_t seed,
                                        const std::vector<int>& ids = {});

CsvTable validation_table(const std::vector<CheckResult>& results, std::uint64_t seed);

/// Scenario shrunk to 4x4 arrays for fast repeated runs.
Scenario reduced_scenario(const Scenario& scenario);

}  // namespace spooflab

#endif
