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

#include "spooflab/radar_receiver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace spooflab {

double SpectrumScan::dominant_angle() const {
  if (power.empty()) throw std::invalid_argument("empty spectrum");
  const auto it = std::max_element(power.begin(), power.end());
  return angles[static_cast<std::size_t>(it - power.begin())];
}

double SpectrumScan::value_at(double angle) const {
  if (power.empty()) throw std::invalid_argument("empty spectrum");
  std::size_t best = 0;
  for (std::size_t i = 1; i < angles.size(); ++i)
    if (std::abs(angles[i] - angle) < std::abs(angles[best] - angle)) best = i;
  return power[best];
}

double SpectrumScan::median() const {
  if (power.empty()) throw std::invalid_argument("empty spectrum");
  std::vector<double> sorted = power;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  return n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

std::string to_string(BaselineKind kind) {
  switch (kind) {
    case BaselineKind::NoIrs: return "no_irs";
    case BaselineKind::RandomPhase: return "random_phase";
    case BaselineKind::OptimizedMm: return "optimized_mm";
    case BaselineKind::OptimizedSdr: return "optimized_sdr";
  }
  return "unknown";
}

BaselineKind parse_baseline_kind(const std::string& name) {
  if (name == "no_irs") return BaselineKind::NoIrs;
  if (name == "random_phase") return BaselineKind::RandomPhase;
  if (name == "optimized_mm") return BaselineKind::OptimizedMm;
  if (name == "optimized_sdr") return BaselineKind::OptimizedSdr;
  throw std::invalid_argument("unknown baseline kind '" + name + "'");
}

CMatrix spatial_covariance(const EchoBatch& echo) {
  const auto k = echo.samples.cols();
  if (k < 1) throw std::invalid_argument("spatial_covariance: need at least one sample");
  CMatrix r = echo.samples * echo.samples.adjoint() / static_cast<double>(k);
  return 0.5 * (r + r.adjoint());
}

SpectrumScan bartlett_spectrum(const CMatrix& covariance, std::span<const AnglePair> scan,
                               const UpaGeometry& radar_geom, double threshold) {
  if (scan.empty()) throw std::invalid_argument("bartlett_spectrum: empty scan");
  const int m = radar_geom.size();
  if (covariance.rows() != m || covariance.cols() != m)
    throw std::invalid_argument("bartlett_spectrum: covariance must be M x M");

  SpectrumScan out;
  out.angles.reserve(scan.size());
  out.power.reserve(scan.size());
  const double norm = static_cast<double>(m) * m;
  for (const AnglePair& dir : scan) {
    const CVector a = steering_2d(dir, radar_geom);
    const double p = a.dot(covariance * a).real() / norm;
    out.angles.push_back(dir.elevation);
    out.power.push_back(std::max(p, 0.0));
  }

  const auto& p = out.power;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool left = i == 0 || p[i] >= p[i - 1];
    const bool right = i + 1 == n || p[i] > p[i + 1];
    if (left && right && p[i] > threshold) out.peak_angles.push_back(out.angles[i]);
  }
  return out;
}

std::vector<AnglePair> in_plane_scan(const std::vector<double>& grid) {
  std::vector<AnglePair> scan;
  scan.reserve(grid.size());
  for (double phi : grid) scan.push_back({phi, 0.0});
  return scan;
}

namespace {

ReflectionVector random_theta(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  Eigen::VectorXd phases(n);
  for (int i = 0; i < n; ++i) phases(i) = phase(rng);
  return ReflectionVector::from_phases(phases);
}

}  // namespace

ReflectionVector make_theta(BaselineKind kind, const Scenario& scenario, std::uint64_t seed,
                            const SolverSettings& settings) {
  const int n = scenario.irs_size();
  switch (kind) {
    case BaselineKind::NoIrs: return ReflectionVector::absorb(n);
    case BaselineKind::RandomPhase: return random_theta(n, seed);
    case BaselineKind::OptimizedMm:
      return solve_mm(cascaded_coefficients(scenario), scenario.threshold, settings.mm).theta;
    case BaselineKind::OptimizedSdr:
      return solve_sdr(cascaded_coefficients(scenario), scenario.threshold, settings.admm, seed).theta;
  }
  throw std::invalid_argument("make_theta: unknown baseline kind");
}

CMatrix bare_target_echo(const Scenario& scenario, double target_rcs, const PhaseDraw& draw,
                         const Waveform& waveform) {
  if (target_rcs < 0.0) throw std::invalid_argument("target RCS must be non-negative");
  const CVector a = steering_2d(scenario.angle_ri, scenario.radar_geom);
  const double rho_abs_sq = target_rcs * scenario.ref_gain / (scenario.dist_ri * scenario.dist_ri);
  const Complex rho_sq = std::polar(rho_abs_sq, 2.0 * draw.nu_ri);
  return rho_sq * a * (a.transpose() * waveform.samples);
}

SpectrumScan epoch_averaged_scan(const Scenario& scenario, BaselineKind kind,
                                 const std::optional<ReflectionVector>& fixed_theta,
                                 const ScanConfig& config, std::uint64_t seed) {
  if (config.epochs < 1) throw std::invalid_argument("scan needs at least one epoch");
  const bool optimized = kind == BaselineKind::OptimizedMm || kind == BaselineKind::OptimizedSdr;
  if (optimized && !fixed_theta)
    throw std::invalid_argument("optimized scans need a precomputed reflection vector");

  const int m = scenario.radar_size();
  const Waveform s = Waveform::identity(m);
  CMatrix cov = CMatrix::Zero(m, m);
  for (int e = 0; e < config.epochs; ++e) {
    const std::uint64_t base = seed + 3 * static_cast<std::uint64_t>(e);
    auto phase_rng = std::mt19937_64(base);
    const PhaseDraw draw = draw_phases(phase_rng);
    const ReflectionVector theta = optimized ? *fixed_theta : make_theta(kind, scenario, base + 1);
    EchoBatch echo = remove_background(simulate_echo(scenario, theta, draw, s, base + 2), scenario, s);
    if (kind == BaselineKind::NoIrs)
      echo.samples += bare_target_echo(scenario, scenario.target_rcs, draw, s);
    cov += spatial_covariance(echo);
  }
  cov /= static_cast<double>(config.epochs);

  const auto scan = in_plane_scan(angle_grid(config.start, config.stop, config.step));
  return bartlett_spectrum(cov, scan, scenario.radar_geom, scenario.threshold);
}

}  // namespace spooflab
