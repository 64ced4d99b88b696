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

#ifndef SPOOFLAB_CHANNEL_MODEL_HPP
#define SPOOFLAB_CHANNEL_MODEL_HPP

#include "spooflab/array_geometry.hpp"

#include <cstdint>
#include <random>

namespace spooflab {

/// Complete physical description of the radar / IRS-target / clutter setup.
/// All quantities are linear: distances in m, powers in mW, RCS in m^2.
struct Scenario {
  UpaGeometry radar_geom;  // M = count_x * count_y
  UpaGeometry irs_geom;    // N = count_x * count_y

  AnglePair angle_ri;  // radar <-> IRS/target, shared by both arrays
  AnglePair angle_rc;  // radar -> clutter (AoD at the radar)
  AnglePair angle_ci;  // clutter -> IRS (AoA at the IRS)

  double dist_ri = 100.0;
  double dist_rc = 97.0;
  double dist_ci = 36.0;

  double ref_gain = 1e-3;      // alpha, path gain at 1 m
  double clutter_rcs = 5.0;    // kappa
  double noise_power = 0.0;    // sigma^2 per complex sample
  double threshold = 1e-7;     // gamma
  double target_rcs = 10.0;    // skin return of the bare target (no-IRS baseline only)

  /// Default experiment setup: 8x8 radar, 11x11 IRS, 100/97/36 m,
  /// alpha = -30 dB, lambda = 0.05 m, kappa = 7 dBsm, gamma = 1e-7 mW.
  static Scenario standard();

  int radar_size() const { return radar_geom.size(); }
  int irs_size() const { return irs_geom.size(); }
  double wavelength() const { return radar_geom.wavelength; }

  void validate() const;
};

/// Per-epoch random LoS phases of the radar->IRS and clutter->IRS links.
struct PhaseDraw {
  double nu_ri = 0.0;
  double nu_ci = 0.0;
};

struct ChannelSet {
  CMatrix g_ri;  // N x M
  CVector h_rc;  // M
  CVector h_ci;  // N
};

enum class ClutterLink { RadarToClutter, ClutterToIrs };

/// sqrt(alpha) / d_RI * exp(j nu).
Complex path_gain_direct(const Scenario& scenario, double nu);

/// sqrt(kappa alpha) / d * exp(j phase). The radar->clutter phase is the
/// deterministic 2 pi d_RC / lambda (nu is ignored); clutter->IRS uses nu.
Complex path_gain_clutter(const Scenario& scenario, ClutterLink which, double nu);

/// G_RI = rho_RI a_I a_R^T, h_RC = rho_RC a_R(RC), h_CI = rho_CI a_I(CI).
ChannelSet build_channels(const Scenario& scenario, const PhaseDraw& draw);

PhaseDraw draw_phases(std::mt19937_64& rng);

/// Generator for trial/epoch `index` of a seeded stream.
inline std::mt19937_64 derived_rng(std::uint64_t base_seed, std::uint64_t index) {
  return std::mt19937_64(base_seed + index);
}

}  // namespace spooflab

#endif
