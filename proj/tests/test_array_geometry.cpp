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
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <stdexcept>

using namespace spooflab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("steering_1d examples", "[array_geometry]") {
  const double lambda = 0.05;

  const CVector zero = steering_1d(0.0, 4, 0.013, lambda);
  for (int k = 0; k < 4; ++k) CHECK(zero(k) == Complex(1.0, 0.0));

  const CVector half = steering_1d(1.0, 2, lambda / 2.0, lambda);
  CHECK(half(0) == Complex(1.0, 0.0));
  CHECK_THAT(half(1).real(), WithinAbs(-1.0, 1e-15));
  CHECK_THAT(half(1).imag(), WithinAbs(0.0, 1e-15));

  const CVector v = steering_1d(0.37, 16, lambda / 2.0, lambda);
  for (int k = 0; k < 16; ++k) CHECK_THAT(std::abs(v(k)), WithinAbs(1.0, 1e-12));
  CHECK_THAT(v.squaredNorm(), WithinRel(16.0, 1e-12));
}

TEST_CASE("steering_1d entry formula and first entry", "[array_geometry]") {
  const double d = 0.021, lambda = 0.05, phi = -0.63;
  const CVector v = steering_1d(phi, 7, d, lambda);
  CHECK(v(0) == Complex(1.0, 0.0));
  for (int k = 0; k < 7; ++k) {
    const Complex expected = std::exp(Complex(0.0, -2.0 * kPi * d / lambda * k * phi));
    CHECK(std::abs(v(k) - expected) < 1e-13);
  }
}

TEST_CASE("steering_1d rejects empty arrays", "[array_geometry]") {
  CHECK_THROWS_AS(steering_1d(0.2, 0, 0.025, 0.05), std::invalid_argument);
}

TEST_CASE("steering_1d conjugate symmetry", "[array_geometry][property]") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    const double phi = u(rng);
    const CVector a = steering_1d(phi, 9, 0.025, 0.05);
    const CVector b = steering_1d(-phi, 9, 0.025, 0.05);
    CHECK((a.conjugate() - b).norm() < 1e-13);
  }
}

TEST_CASE("steering_2d examples", "[array_geometry]") {
  const double lambda = 0.05;

  const CVector flat = steering_2d({0.0, 1.234}, UpaGeometry::half_wavelength(3, 3, lambda));
  REQUIRE(flat.size() == 9);
  for (int k = 0; k < 9; ++k) CHECK(flat(k) == Complex(1.0, 0.0));

  const CVector edge = steering_2d({kPi / 2.0, 0.0}, UpaGeometry::half_wavelength(2, 2, lambda));
  const double expected[] = {1.0, 1.0, -1.0, -1.0};
  for (int k = 0; k < 4; ++k) {
    CHECK_THAT(edge(k).real(), WithinAbs(expected[k], 1e-15));
    CHECK_THAT(edge(k).imag(), WithinAbs(0.0, 1e-15));
  }

  const CVector big =
      steering_2d({deg_to_rad(-30.0), kPi}, UpaGeometry::half_wavelength(11, 11, lambda));
  CHECK(big(0) == Complex(1.0, 0.0));
  CHECK_THAT(big.squaredNorm(), WithinRel(121.0, 1e-12));
}

TEST_CASE("steering_2d is the x-first Kronecker product", "[array_geometry]") {
  const UpaGeometry geom{3, 4, 0.02, 0.05};
  const AnglePair dir{0.7, 2.1};
  const CVector x = steering_1d(std::cos(dir.azimuth) * std::sin(dir.elevation), 3, 0.02, 0.05);
  const CVector y = steering_1d(std::sin(dir.azimuth) * std::sin(dir.elevation), 4, 0.02, 0.05);
  const CVector a = steering_2d(dir, geom);
  for (int ix = 0; ix < 3; ++ix)
    for (int iy = 0; iy < 4; ++iy) CHECK(std::abs(a(ix * 4 + iy) - x(ix) * y(iy)) < 1e-14);
}

TEST_CASE("steering_2d unit modulus and norm", "[array_geometry][property]") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> el(-kPi / 2.0, kPi / 2.0), az(0.0, 2.0 * kPi);
  std::uniform_int_distribution<int> count(1, 12);
  for (int t = 0; t < 200; ++t) {
    const UpaGeometry g = UpaGeometry::half_wavelength(count(rng), count(rng), 0.05);
    const CVector a = steering_2d({el(rng), az(rng)}, g);
    for (int k = 0; k < a.size(); ++k) REQUIRE(std::abs(std::abs(a(k)) - 1.0) <= 1e-12);
    REQUIRE(test::rel_diff(a.squaredNorm(), g.size()) <= 1e-9);
  }
}

TEST_CASE("steering_2d at broadside is all ones for any azimuth", "[array_geometry][property]") {
  for (double az : {0.0, 0.5, kPi, 4.0, 6.2}) {
    const CVector a = steering_2d({0.0, az}, UpaGeometry::half_wavelength(4, 5, 0.05));
    CHECK((a - CVector::Ones(20)).norm() == 0.0);
  }
}

TEST_CASE("geometry and angle validation", "[array_geometry]") {
  CHECK_THROWS_AS((UpaGeometry{0, 2, 0.025, 0.05}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((UpaGeometry{2, 2, 0.0, 0.05}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((UpaGeometry{2, 2, 0.025, -1.0}.validate()), std::invalid_argument);
  CHECK_NOTHROW(UpaGeometry::half_wavelength(8, 8, 0.05).validate());
  CHECK(UpaGeometry::half_wavelength(8, 8, 0.05).size() == 64);

  CHECK_THROWS_AS((AnglePair{2.0, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((AnglePair{0.1, 2.0 * kPi}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((AnglePair{0.1, -0.1}.validate()), std::invalid_argument);
  CHECK_NOTHROW((AnglePair{-kPi / 2.0, 0.0}.validate()));

  const AnglePair wrapped = AnglePair::from_degrees(30.0, -180.0);
  CHECK_THAT(wrapped.azimuth, WithinAbs(kPi, 1e-15));
  CHECK_THAT(wrapped.elevation, WithinAbs(kPi / 6.0, 1e-15));
}

TEST_CASE("angle_grid examples", "[array_geometry]") {
  const auto a = angle_grid(-kPi / 2.0, kPi / 2.0, kPi / 2.0);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == -kPi / 2.0);
  CHECK_THAT(a[1], WithinAbs(0.0, 1e-15));
  CHECK(a[2] <= kPi / 2.0);
  CHECK_THAT(a[2], WithinAbs(kPi / 2.0, 1e-15));

  const auto single = angle_grid(0.0, 0.0, 0.1);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == 0.0);

  CHECK(angle_grid(deg_to_rad(-90.0), deg_to_rad(90.0), deg_to_rad(0.5)).size() == 361);
  CHECK(angle_grid(deg_to_rad(-90.0), deg_to_rad(90.0), deg_to_rad(0.25)).size() == 721);
}

TEST_CASE("angle_grid errors and spacing", "[array_geometry]") {
  CHECK_THROWS_AS(angle_grid(0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(angle_grid(0.0, 1.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(angle_grid(1.0, 0.0, 0.1), std::invalid_argument);

  const auto g = angle_grid(0.1, 1.0, 0.3);
  REQUIRE(g.size() == 4);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK_THAT(g[i] - g[i - 1], WithinAbs(0.3, 1e-12));
  CHECK(g.back() <= 1.0);

  const auto uneven = angle_grid(0.0, 1.0, 0.3);
  CHECK(uneven.size() == 4);
  CHECK(uneven.back() <= 1.0);
}
