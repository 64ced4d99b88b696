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

#include "spooflab/array_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace spooflab {

AnglePair AnglePair::from_degrees(double elevation_deg, double azimuth_deg) {
  double az = std::fmod(azimuth_deg, 360.0);
  if (az < 0.0) az += 360.0;
  return {deg_to_rad(elevation_deg), deg_to_rad(az)};
}

void AnglePair::validate() const {
  if (!std::isfinite(elevation) || elevation < -kPi / 2 || elevation > kPi / 2)
    throw std::invalid_argument("elevation must lie in [-pi/2, pi/2]");
  if (!std::isfinite(azimuth) || azimuth < 0.0 || azimuth >= 2 * kPi)
    throw std::invalid_argument("azimuth must lie in [0, 2pi)");
}

UpaGeometry UpaGeometry::half_wavelength(int count_x, int count_y, double wavelength) {
  return {count_x, count_y, wavelength / 2.0, wavelength};
}

void UpaGeometry::validate() const {
  if (count_x < 1 || count_y < 1) throw std::invalid_argument("array counts must be positive");
  if (!(spacing > 0.0)) throw std::invalid_argument("element spacing must be positive");
  if (!(wavelength > 0.0)) throw std::invalid_argument("wavelength must be positive");
}

CVector steering_1d(double phase_diff, int count, double spacing, double wavelength) {
  if (count < 1) throw std::invalid_argument("steering_1d: count must be >= 1");
  const double step = -2.0 * kPi * spacing / wavelength * phase_diff;
  CVector out(count);
  out(0) = Complex(1.0, 0.0);
  for (int k = 1; k < count; ++k) out(k) = std::polar(1.0, step * k);
  return out;
}

CVector steering_2d(const AnglePair& angles, const UpaGeometry& geom) {
  geom.validate();
  const double sin_el = std::sin(angles.elevation);
  const CVector ex = steering_1d(std::cos(angles.azimuth) * sin_el, geom.count_x, geom.spacing,
                                 geom.wavelength);
  const CVector ey = steering_1d(std::sin(angles.azimuth) * sin_el, geom.count_y, geom.spacing,
                                 geom.wavelength);
  CVector out(geom.size());
  for (int ix = 0; ix < geom.count_x; ++ix)
    for (int iy = 0; iy < geom.count_y; ++iy) out(ix * geom.count_y + iy) = ex(ix) * ey(iy);
  return out;
}

std::vector<double> angle_grid(double start, double stop, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("angle_grid: step must be positive");
  if (start > stop) throw std::invalid_argument("angle_grid: start must not exceed stop");
  // Small slack so that e.g. a 180 deg span at 0.5 deg hits the endpoint.
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) grid.push_back(start + step * static_cast<double>(i));
  if (grid.back() > stop) grid.back() = stop;
  return grid;
}

}  // namespace spooflab
