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

#ifndef SPOOFLAB_ARRAY_GEOMETRY_HPP
#define SPOOFLAB_ARRAY_GEOMETRY_HPP

#include <Eigen/Dense>

#include <complex>
#include <numbers>
#include <vector>

namespace spooflab {

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Elevation/azimuth direction pair in radians. Elevation is measured from
/// the array broadside, azimuth from the array x-axis.
struct AnglePair {
  double elevation = 0.0;
  double azimuth = 0.0;

  static AnglePair from_degrees(double elevation_deg, double azimuth_deg);
  /// Throws std::invalid_argument unless elevation is in [-pi/2, pi/2] and
  /// azimuth in [0, 2pi).
  void validate() const;
};

/// Uniform planar array with count_x * count_y elements on a square grid.
struct UpaGeometry {
  int count_x = 1;
  int count_y = 1;
  double spacing = 0.5;
  double wavelength = 1.0;

  static UpaGeometry half_wavelength(int count_x, int count_y, double wavelength);

  int size() const { return count_x * count_y; }
  void validate() const;
};

/// ULA response: entry k is exp(-j 2 pi spacing/wavelength k phase_diff).
CVector steering_1d(double phase_diff, int count, double spacing, double wavelength);

/// UPA response as the Kronecker product x-factor (x) y-factor, so element
/// (ix, iy) lives at index ix * count_y + iy.
CVector steering_2d(const AnglePair& angles, const UpaGeometry& geom);

/// Evenly spaced grid from start, inclusive, with the last point <= stop.
std::vector<double> angle_grid(double start, double stop, double step);

}  // namespace spooflab

#endif
