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

#ifndef SPOOFLAB_RADAR_RECEIVER_HPP
#define SPOOFLAB_RADAR_RECEIVER_HPP

#include "spooflab/sdr_solver.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spooflab {

struct SpectrumScan {
  std::vector<double> angles;       // radians
  std::vector<double> power;        // mW
  std::vector<double> peak_angles;  // local maxima above the detection threshold

  /// Angle of the global maximum.
  double dominant_angle() const;
  /// Spectrum value at the grid point closest to `angle`.
  double value_at(double angle) const;
  double median() const;
};

enum class BaselineKind { NoIrs, RandomPhase, OptimizedMm, OptimizedSdr };

std::string to_string(BaselineKind kind);
/// Accepts no_irs, random_phase, optimized_mm, optimized_sdr.
BaselineKind parse_baseline_kind(const std::string& name);

/// R = Y Y^H / K.
CMatrix spatial_covariance(const EchoBatch& echo);

/// Bartlett scan a^H R a / M^2 over the given directions. The reported
/// angle of each point is its elevation (signed in-plane angle when the
/// scan uses azimuth 0).
SpectrumScan bartlett_spectrum(const CMatrix& covariance, std::span<const AnglePair> scan,
                               const UpaGeometry& radar_geom, double threshold);

/// In-plane scan directions: elevation = each grid angle, azimuth = 0.
std::vector<AnglePair> in_plane_scan(const std::vector<double>& grid);

struct SolverSettings {
  MmConfig mm;
  AdmmConfig admm;
};

/// Reflection vector for one epoch of a baseline. Optimized kinds run the
/// corresponding solver on the scenario's threshold; random_phase draws
/// i.i.d. uniform phases from `seed`; no_irs returns the absorbing vector.
ReflectionVector make_theta(BaselineKind kind, const Scenario& scenario, std::uint64_t seed,
                            const SolverSettings& settings = {});

/// Skin return of the bare target, rho_T^2 a_R a_R^T S with
/// |rho_T|^2 = kappa_T alpha / d_RI^2 and the epoch's round-trip phase.
CMatrix bare_target_echo(const Scenario& scenario, double target_rcs, const PhaseDraw& draw,
                         const Waveform& waveform);

struct ScanConfig {
  int epochs = 200;
  double start = deg_to_rad(-90.0);
  double stop = deg_to_rad(90.0);
  double step = deg_to_rad(0.25);
};

/// Background-removed, epoch-averaged Bartlett scan for one baseline.
/// `fixed_theta` is used for the optimized kinds (solved once up front).
/// Epoch e draws its link phases, random IRS phases and noise from the
/// seeds seed + 3e, seed + 3e + 1 and seed + 3e + 2.
SpectrumScan epoch_averaged_scan(const Scenario& scenario, BaselineKind kind,
                                 const std::optional<ReflectionVector>& fixed_theta,
                                 const ScanConfig& config, std::uint64_t seed);

}  // namespace spooflab

#endif
