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

#ifndef SPOOFLAB_ORACLE_BRUTEFORCE_HPP
#define SPOOFLAB_ORACLE_BRUTEFORCE_HPP

#include "spooflab/mm_solver.hpp"

#include <cstdint>

namespace spooflab {

struct BruteForceResult {
  ReflectionVector theta;
  double objective = 0.0;  // best feasible theta^H A theta
  double constraint = 0.0; // theta^H B theta at the winner
  std::uint64_t feasible_count = 0;
  std::uint64_t total_count = 0;      // levels^N, the size of the search space
  std::uint64_t evaluated_count = 0;  // levels^(N-1) when the first phase is pinned
};

inline constexpr std::uint64_t kBruteForceBudget = 10'000'000;

/// Exhaustive search over theta_n in {exp(j 2 pi k / levels)}.
/// With pin_first, theta_1 = 1 and every feasible point stands in for its
/// `levels` global-phase rotations, so feasible_count is scaled accordingly.
BruteForceResult enumerate_best(const QuadraticForms& forms, double gamma, int levels,
                                bool pin_first = true);

}  // namespace spooflab

#endif
