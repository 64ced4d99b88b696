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

#include "spooflab/power_model.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace spooflab {

CascadedVectors cascaded_vectors(const Scenario& scenario) {
  const CVector a_ri = steering_2d(scenario.angle_ri, scenario.irs_geom);
  const CVector a_ci = steering_2d(scenario.angle_ci, scenario.irs_geom);
  // x^H = a^T .* b^T  <=>  x = conj(a .* b)
  return {a_ri.cwiseProduct(a_ci).conjugate(), a_ri.cwiseProduct(a_ri).conjugate(),
          a_ci.cwiseProduct(a_ci).conjugate()};
}

QFactors q_factors(const Scenario& scenario) {
  const double m = scenario.radar_size();
  const double ka = scenario.clutter_rcs * scenario.ref_gain;
  QFactors q;
  q.radar = scenario.ref_gain / (scenario.dist_ri * scenario.dist_ri) * m;
  q.clutter = ka / (scenario.dist_rc * scenario.dist_rc) * ka / (scenario.dist_ci * scenario.dist_ci) * m;
  return q;
}

CascadedCoefficients cascaded_coefficients(const Scenario& scenario) {
  scenario.validate();
  auto vecs = cascaded_vectors(scenario);
  const auto q = q_factors(scenario);
  return {std::move(vecs.g), std::move(vecs.v), std::move(vecs.r), q.radar, q.clutter};
}

// ---------------------------------------------------------------------------

ReflectionVector ReflectionVector::reflect(CVector theta) {
  for (Eigen::Index n = 0; n < theta.size(); ++n)
    if (std::abs(std::abs(theta(n)) - 1.0) > 1e-9)
      throw std::invalid_argument("reflection coefficients must have unit modulus");
  return {std::move(theta), ReflectionMode::Reflect};
}

ReflectionVector ReflectionVector::from_phases(const Eigen::VectorXd& phases) {
  CVector theta(phases.size());
  for (Eigen::Index n = 0; n < phases.size(); ++n) theta(n) = std::polar(1.0, phases(n));
  return {std::move(theta), ReflectionMode::Reflect};
}

ReflectionVector ReflectionVector::phases_of(const CVector& x) {
  CVector theta(x.size());
  for (Eigen::Index n = 0; n < x.size(); ++n)
    theta(n) = x(n) == Complex(0.0, 0.0) ? Complex(1.0, 0.0) : std::polar(1.0, std::arg(x(n)));
  return {std::move(theta), ReflectionMode::Reflect};
}

ReflectionVector ReflectionVector::absorb(int size) {
  if (size < 1) throw std::invalid_argument("reflection vector size must be positive");
  return {CVector::Zero(size), ReflectionMode::Absorb};
}

namespace {

void check_length(const ReflectionVector& theta, const CascadedCoefficients& coeffs) {
  if (theta.size() != coeffs.size())
    throw std::invalid_argument("reflection vector length does not match the IRS size");
}

}  // namespace

double mean_power_target(const ReflectionVector& theta, const CascadedCoefficients& coeffs) {
  check_length(theta, coeffs);
  const CVector& t = theta.values();
  return coeffs.q_radar * coeffs.q_clutter * std::norm(coeffs.g.dot(t)) +
         coeffs.q_radar * coeffs.q_radar * std::norm(coeffs.v.dot(t));
}

double mean_power_clutter(const ReflectionVector& theta, const CascadedCoefficients& coeffs) {
  check_length(theta, coeffs);
  const CVector& t = theta.values();
  return coeffs.q_clutter * coeffs.q_clutter * std::norm(coeffs.r.dot(t)) +
         coeffs.q_clutter * coeffs.q_radar * std::norm(coeffs.g.dot(t));
}

// ---------------------------------------------------------------------------

Waveform Waveform::identity(int m) {
  if (m < 1) throw std::invalid_argument("waveform needs at least one row");
  return {CMatrix::Identity(m, m), "identity"};
}

Waveform Waveform::qpsk(int m, int k, std::uint64_t seed) {
  if (m < 1 || k < 1) throw std::invalid_argument("waveform dimensions must be positive");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution bit(0.5);
  const double scale = 1.0 / std::sqrt(2.0 * k);
  CMatrix s(m, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < m; ++i)
      s(i, j) = Complex(bit(rng) ? scale : -scale, bit(rng) ? scale : -scale);
  return {std::move(s), "qpsk-" + std::to_string(seed)};
}

namespace {

void check_waveform(const Scenario& scenario, const Waveform& waveform) {
  if (waveform.samples.rows() != scenario.radar_size())
    throw std::invalid_argument("waveform row count must equal the number of radar antennas");
}

CMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, double variance,
                         std::uint64_t seed) {
  CMatrix z = CMatrix::Zero(rows, cols);
  if (variance <= 0.0) return z;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(variance / 2.0));
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) z(i, j) = Complex(normal(rng), normal(rng));
  return z;
}

}  // namespace

CMatrix background_echo(const Scenario& scenario, const Waveform& waveform) {
  check_waveform(scenario, waveform);
  const CVector h_rc =
      path_gain_clutter(scenario, ClutterLink::RadarToClutter, 0.0) *
      steering_2d(scenario.angle_rc, scenario.radar_geom);
  return h_rc * (h_rc.transpose() * waveform.samples);
}

EchoBatch simulate_echo(const Scenario& scenario, const ReflectionVector& theta,
                        const PhaseDraw& draw, const Waveform& waveform,
                        std::uint64_t noise_seed) {
  check_waveform(scenario, waveform);
  if (theta.size() != scenario.irs_size())
    throw std::invalid_argument("reflection vector length does not match the IRS size");
  const ChannelSet ch = build_channels(scenario, draw);

  // H = G + h_CI h_RC^T;  Y = H^T Theta H S + h_RC h_RC^T S + Z
  const CMatrix h = ch.g_ri + ch.h_ci * ch.h_rc.transpose();
  const CMatrix theta_h = theta.values().asDiagonal() * h;
  const CMatrix& s = waveform.samples;

  EchoBatch out;
  out.samples = h.transpose() * (theta_h * s) + ch.h_rc * (ch.h_rc.transpose() * s) +
                complex_gaussian(s.rows(), s.cols(), scenario.noise_power, noise_seed);
  out.draw = draw;
  out.waveform_id = waveform.id;
  return out;
}

EchoBatch remove_background(const EchoBatch& echo, const Scenario& scenario,
                            const Waveform& waveform) {
  EchoBatch out = echo;
  out.samples -= background_echo(scenario, waveform);
  return out;
}

EchoComponents echo_components(const ChannelSet& ch, const ReflectionVector& theta) {
  const auto& t = theta.values();
  const CMatrix theta_g = t.asDiagonal() * ch.g_ri;   // N x M
  const CVector theta_hci = t.cwiseProduct(ch.h_ci);  // N
  EchoComponents c;
  c.target_direct = ch.g_ri.transpose() * theta_g;
  c.target_via_clutter = (ch.g_ri.transpose() * theta_hci) * ch.h_rc.transpose();
  c.clutter_via_target = ch.h_rc * (ch.h_ci.transpose() * theta_g);
  c.clutter_direct = ch.h_rc * (ch.h_ci.transpose() * theta_hci) * ch.h_rc.transpose();
  return c;
}

namespace {

struct SampleStats {
  double mean = 0.0;
  double stderr_ = 0.0;
};

SampleStats stats_of(const std::vector<double>& x) {
  SampleStats s;
  const auto n = static_cast<double>(x.size());
  for (double v : x) s.mean += v;
  s.mean /= n;
  if (x.size() > 1) {
    double ss = 0.0;
    for (double v : x) ss += (v - s.mean) * (v - s.mean);
    s.stderr_ = std::sqrt(ss / (n - 1.0) / n);
  }
  return s;
}

// |a X + b Y|_F^2 and the cross term 2 Re<a X, b Y>, in one pass.
std::pair<double, double> split_power(const CMatrix& x, Complex a, const CMatrix& y, Complex b) {
  double total = 0.0;
  double cross = 0.0;
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      const Complex p = a * x(i, j);
      const Complex q = b * y(i, j);
      total += std::norm(p + q);
      cross += 2.0 * (std::conj(p) * q).real();
    }
  return {total, cross};
}

}  // namespace

MonteCarloPower monte_carlo_power(const Scenario& scenario, const ReflectionVector& theta,
                                  std::span<const PhaseDraw> draws) {
  if (draws.empty()) throw std::invalid_argument("monte_carlo_power: at least one trial required");
  if (theta.size() != scenario.irs_size())
    throw std::invalid_argument("reflection vector length does not match the IRS size");

  // Each link depends on its draw only through a unit phasor, so the four
  // echo components at nu = 0 are re-phased per draw:
  //   G -> e^{j nu_RI} G,  h_CI -> e^{j nu_CI} h_CI.
  const EchoComponents base = echo_components(build_channels(scenario, {0.0, 0.0}), theta);

  const auto n = draws.size();
  std::vector<double> pt(n), pc(n), xt(n), xc(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Complex e_ri = std::polar(1.0, draws[i].nu_ri);
    const Complex e_ci = std::polar(1.0, draws[i].nu_ci);
    const auto [t, tx] = split_power(base.target_via_clutter, e_ri * e_ci, base.target_direct, e_ri * e_ri);
    const auto [c, cx] = split_power(base.clutter_direct, e_ci * e_ci, base.clutter_via_target, e_ci * e_ri);
    pt[i] = t;
    xt[i] = tx;
    pc[i] = c;
    xc[i] = cx;
  }

  MonteCarloPower out;
  out.trials = static_cast<int>(n);
  const auto st = stats_of(pt), sc = stats_of(pc), sxt = stats_of(xt), sxc = stats_of(xc);
  out.target = st.mean;
  out.target_stderr = st.stderr_;
  out.clutter = sc.mean;
  out.clutter_stderr = sc.stderr_;
  out.target_cross_mean = sxt.mean;
  out.target_cross_stderr = sxt.stderr_;
  out.clutter_cross_mean = sxc.mean;
  out.clutter_cross_stderr = sxc.stderr_;
  return out;
}

MonteCarloPower monte_carlo_power(const Scenario& scenario, const ReflectionVector& theta,
                                  int trials, std::uint64_t base_seed) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_power: trials must be >= 1");
  std::vector<PhaseDraw> draws;
  draws.reserve(static_cast<std::size_t>(trials));
  for (int i = 0; i < trials; ++i) {
    auto rng = derived_rng(base_seed, static_cast<std::uint64_t>(i));
    draws.push_back(draw_phases(rng));
  }
  return monte_carlo_power(scenario, theta, draws);
}

}  // namespace spooflab
