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

#include "spooflab/channel_model.hpp"

#include <cmath>
#include <stdexcept>

namespace spooflab {

Scenario Scenario::standard() {
  Scenario s;
  const double wavelength = 0.05;
  s.radar_geom = UpaGeometry::half_wavelength(8, 8, wavelength);
  s.irs_geom = UpaGeometry::half_wavelength(11, 11, wavelength);
  // Everything lies in one vertical plane: eta_RI = eta_RC = pi, eta_CI = 0.
  // The radar sees the target at -30 deg and the clutter at -52 deg; the
  // clutter AoA at the IRS follows from the 100/97/36 m triangle.
  s.angle_ri = AnglePair::from_degrees(30.0, 180.0);
  s.angle_rc = AnglePair::from_degrees(52.0, 180.0);
  s.angle_ci = AnglePair::from_degrees(44.8, 0.0);
  s.dist_ri = 100.0;
  s.dist_rc = 97.0;
  s.dist_ci = 36.0;
  s.ref_gain = std::pow(10.0, -30.0 / 10.0);
  s.clutter_rcs = std::pow(10.0, 7.0 / 10.0);
  s.target_rcs = std::pow(10.0, 10.0 / 10.0);
  s.noise_power = 0.0;
  s.threshold = 1e-7;
  return s;
}

void Scenario::validate() const {
  radar_geom.validate();
  irs_geom.validate();
  if (radar_geom.wavelength != irs_geom.wavelength)
    throw std::invalid_argument("radar and IRS must share the carrier wavelength");
  angle_ri.validate();
  angle_rc.validate();
  angle_ci.validate();
  if (!(dist_ri > 0.0) || !(dist_rc > 0.0) || !(dist_ci > 0.0))
    throw std::invalid_argument("all distances must be positive");
  if (!(ref_gain > 0.0)) throw std::invalid_argument("reference path gain must be positive");
  if (!(clutter_rcs > 0.0)) throw std::invalid_argument("clutter RCS must be positive");
  if (!(target_rcs >= 0.0)) throw std::invalid_argument("target RCS must be non-negative");
  if (!(noise_power >= 0.0)) throw std::invalid_argument("noise power must be non-negative");
  if (!(threshold >= 0.0)) throw std::invalid_argument("detection threshold must be non-negative");
}

Complex path_gain_direct(const Scenario& scenario, double nu) {
  if (!(scenario.dist_ri > 0.0)) throw std::invalid_argument("path_gain_direct: d_RI must be positive");
  return std::polar(std::sqrt(scenario.ref_gain) / scenario.dist_ri, nu);
}

Complex path_gain_clutter(const Scenario& scenario, ClutterLink which, double nu) {
  const double dist = which == ClutterLink::RadarToClutter ? scenario.dist_rc : scenario.dist_ci;
  if (!(dist > 0.0)) throw std::invalid_argument("path_gain_clutter: distance must be positive");
  const double magnitude = std::sqrt(scenario.clutter_rcs * scenario.ref_gain) / dist;
  const double phase =
      which == ClutterLink::RadarToClutter ? 2.0 * kPi * dist / scenario.wavelength() : nu;
  return std::polar(magnitude, phase);
}

ChannelSet build_channels(const Scenario& scenario, const PhaseDraw& draw) {
  scenario.validate();
  const CVector a_irs_ri = steering_2d(scenario.angle_ri, scenario.irs_geom);
  const CVector a_radar_ri = steering_2d(scenario.angle_ri, scenario.radar_geom);
  const CVector a_radar_rc = steering_2d(scenario.angle_rc, scenario.radar_geom);
  const CVector a_irs_ci = steering_2d(scenario.angle_ci, scenario.irs_geom);

  ChannelSet ch;
  ch.g_ri = path_gain_direct(scenario, draw.nu_ri) * a_irs_ri * a_radar_ri.transpose();
  ch.h_rc = path_gain_clutter(scenario, ClutterLink::RadarToClutter, 0.0) * a_radar_rc;
  ch.h_ci = path_gain_clutter(scenario, ClutterLink::ClutterToIrs, draw.nu_ci) * a_irs_ci;
  return ch;
}

PhaseDraw draw_phases(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  PhaseDraw d;
  // generate_canonical may round up to the open end of the interval.
  auto wrap = [](double x) { return x >= 2.0 * kPi ? 0.0 : x; };
  d.nu_ri = wrap(phase(rng));
  d.nu_ci = wrap(phase(rng));
  return d;
}

}  // namespace spooflab
