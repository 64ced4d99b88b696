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

#ifndef SPOOFLAB_SCENARIO_IO_HPP
#define SPOOFLAB_SCENARIO_IO_HPP

#include "spooflab/channel_model.hpp"

#include <string>

namespace spooflab {

/// Parses a `key = value` scenario file. Blank lines and `#` comments are
/// ignored; every key carries its unit as a suffix and missing keys keep
/// the Scenario::standard() value:
///
///   radar_nx, radar_ny, irs_nx, irs_ny        element counts
///   wavelength_m                              carrier wavelength
///   radar_spacing_m, irs_spacing_m            default wavelength / 2
///   ri_elevation_deg, ri_azimuth_deg          radar <-> IRS direction
///   rc_elevation_deg, rc_azimuth_deg          radar -> clutter direction
///   ci_elevation_deg, ci_azimuth_deg          clutter -> IRS direction
///   dist_ri_m, dist_rc_m, dist_ci_m
///   ref_gain_db                               alpha
///   clutter_rcs_dbsm, target_rcs_dbsm
///   noise_power_mw, threshold_mw
///
/// Throws ParseError with the line number on malformed input.
Scenario parse_scenario(const std::string& text);

/// Reads and parses a file; an empty path yields Scenario::standard().
Scenario load_scenario(const std::string& path);

double db_to_linear(double db);

}  // namespace spooflab

#endif
