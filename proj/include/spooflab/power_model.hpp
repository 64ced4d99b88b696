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

#ifndef SPOOFLAB_POWER_MODEL_HPP
#define SPOOFLAB_POWER_MODEL_HPP

#include "spooflab/channel_model.hpp"

#include <cstdint>
#include <span>
#include <string>

namespace spooflab {

/// Cascaded IRS steering vectors and the received-power scale factors.
///
///   g^H = a_I^T(RI) .* a_I^T(CI)
///   v^H = a_I^T(RI) .* a_I^T(RI)
///   r^H = a_I^T(CI) .* a_I^T(CI)
///   Q_R = alpha/d_RI^2 * M,  Q_C = (kappa alpha/d_RC^2)(kappa alpha/d_CI^2) * M
struct CascadedCoefficients {
  CVector g;
  CVector v;
  CVector r;
  double q_radar = 0.0;
  double q_clutter = 0.0;

  int size() const { return static_cast<int>(g.size()); }
};

struct CascadedVectors {
  CVector g;
  CVector v;
  CVector r;
};

struct QFactors {
  double radar = 0.0;
  double clutter = 0.0;
};

CascadedVectors cascaded_vectors(const Scenario& scenario);
QFactors q_factors(const Scenario& scenario);
CascadedCoefficients cascaded_coefficients(const Scenario& scenario);

enum class ReflectionMode { Reflect, Absorb };

/// IRS reflection vector: either all elements ON with unit-modulus
/// coefficients, or all OFF (theta = 0).
class ReflectionVector {
 public:
  ReflectionVector() = default;

  /// Throws std::invalid_argument if any |theta_n| deviates from 1 by more
  /// than 1e-9.
  static ReflectionVector reflect(CVector theta);
  /// Unit-modulus vector with the given element phases.
  static ReflectionVector from_phases(const Eigen::VectorXd& phases);
  /// theta_n = exp(j arg(x_n)); zero entries get phase 0.
  static ReflectionVector phases_of(const CVector& x);
  static ReflectionVector absorb(int size);

  const CVector& values() const { return theta_; }
  ReflectionMode mode() const { return mode_; }
  int size() const { return static_cast<int>(theta_.size()); }

 private:
  ReflectionVector(CVector theta, ReflectionMode mode) : theta_(std::move(theta)), mode_(mode) {}

  CVector theta_;
  ReflectionMode mode_ = ReflectionMode::Absorb;
};

/// Closed-form average power from the target direction:
/// Q_R Q_C |g^H theta|^2 + Q_R^2 |v^H theta|^2.
double mean_power_target(const ReflectionVector& theta, const CascadedCoefficients& coeffs);

/// Closed-form average power from the clutter direction:
/// Q_C^2 |r^H theta|^2 + Q_C Q_R |g^H theta|^2.
double mean_power_clutter(const ReflectionVector& theta, const CascadedCoefficients& coeffs);

/// Radar transmit block S (M x K) with E{S S^H} = I_M.
struct Waveform {
  CMatrix samples;
  std::string id;

  /// S = I_M, K = M. Satisfies S S^H = I exactly.
  static Waveform identity(int m);
  /// Random QPSK symbols scaled by 1/sqrt(K).
  static Waveform qpsk(int m, int k, std::uint64_t seed);
};

struct EchoBatch {
  CMatrix samples;  // M x K
  PhaseDraw draw;
  std::string waveform_id;
};

/// Full received block: reflected-by-IRS + background + noise.
EchoBatch simulate_echo(const Scenario& scenario, const ReflectionVector& theta,
                        const PhaseDraw& draw, const Waveform& waveform,
                        std::uint64_t noise_seed);

/// Background (radar -> clutter -> radar) term h_RC h_RC^T S.
CMatrix background_echo(const Scenario& scenario, const Waveform& waveform);

/// Subtracts the static background term, leaving the target- and
/// clutter-direction components plus noise.
EchoBatch remove_background(const EchoBatch& echo, const Scenario& scenario,
                            const Waveform& waveform);

/// Per-draw split of the background-free echo (noise-free, S = I).
struct EchoComponents {
  CMatrix target_direct;   // G^T Theta G
  CMatrix target_via_clutter;  // G^T Theta h_CI h_RC^T
  CMatrix clutter_via_target;  // h_RC h_CI^T Theta G
  CMatrix clutter_direct;  // h_RC h_CI^T Theta h_CI h_RC^T

  CMatrix target() const { return target_direct + target_via_clutter; }
  CMatrix clutter() const { return clutter_via_target + clutter_direct; }
};

EchoComponents echo_components(const ChannelSet& channels, const ReflectionVector& theta);

struct MonteCarloPower {
  double target = 0.0;
  double clutter = 0.0;
  double target_stderr = 0.0;
  double clutter_stderr = 0.0;
  // Cross terms 2 Re<., .> between the two summands of each direction.
  double target_cross_mean = 0.0;
  double target_cross_stderr = 0.0;
  double clutter_cross_mean = 0.0;
  double clutter_cross_stderr = 0.0;
  int trials = 0;
};

/// Sample averages of the target- and clutter-direction Frobenius powers of
/// the noise-free background-free echo with S = I, over fresh phase draws.
/// Trial i uses derived_rng(base_seed, i).
MonteCarloPower monte_carlo_power(const Scenario& scenario, const ReflectionVector& theta,
                                  int trials, std::uint64_t base_seed);

/// Same estimator over an explicit list of draws.
MonteCarloPower monte_carlo_power(const Scenario& scenario, const ReflectionVector& theta,
                                  std::span<const PhaseDraw> draws);

}  // namespace spooflab

#endif
