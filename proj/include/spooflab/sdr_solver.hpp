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

#ifndef SPOOFLAB_SDR_SOLVER_HPP
#define SPOOFLAB_SDR_SOLVER_HPP

#include "spooflab/mm_solver.hpp"

#include <cstdint>

namespace spooflab {

struct AdmmConfig {
  double step_size = 1.0;  // penalty rho, in units where lambda_max(A) = 1
  int max_iters = 50000;
  double residual_tol = 1e-7;  // on the scaled primal and dual residuals
  int randomization_count = 1000;

  void validate() const;
};

/// Relaxed solution of
///   max Tr(A X)  s.t.  Tr(B X) <= gamma,  X_nn = 1,  X >= 0.
/// theta_matrix is the PSD iterate rescaled to a unit diagonal.
struct SdpSolution {
  CMatrix theta_matrix;
  double primal_residual = 0.0;  // ||X - Z||_F / max(1, ||X||_F, ||Z||_F)
  double dual_residual = 0.0;    // rho ||Z - Z_prev||_F / max(1, ||rho U||_F)
  double raw_diagonal_error = 0.0;  // max |Z_nn - 1| of the PSD iterate before rescaling
  double objective = 0.0;        // Tr(A Theta), mW
  int iterations = 0;
  bool converged = false;
};

/// Pluggable SDP backend so an external conic solver can be compared.
class SdpBackend {
 public:
  virtual ~SdpBackend() = default;
  virtual SdpSolution solve(const QuadraticForms& forms, double gamma,
                            const AdmmConfig& config) const = 0;
};

/// ADMM splitting between {diag = 1, Tr(B X) <= gamma} (closed-form
/// projection) and the PSD cone (eigenvalue clipping).
class AdmmSdpBackend final : public SdpBackend {
 public:
  SdpSolution solve(const QuadraticForms& forms, double gamma,
                    const AdmmConfig& config) const override;
};

SdpSolution solve_sdp(const QuadraticForms& forms, double gamma, const AdmmConfig& config);

/// Euclidean projection of a Hermitian matrix onto
/// {X : X_nn = 1, Re Tr(B X) <= gamma}.
CMatrix project_affine(const CMatrix& y, const CMatrix& b, double gamma);

/// Projection onto the PSD cone (negative eigenvalues clipped to zero).
CMatrix project_psd(const CMatrix& y);

/// Draws `count` candidates xi ~ CN(0, Theta), maps each to exp(j arg xi)
/// and keeps the feasible one with the largest objective. Falls back to the
/// dominant eigenvector when count = 0 and to feasibility restoration when
/// no draw is feasible. Candidate i uses derived_rng(seed, i).
SolverReport gaussian_randomization(const SdpSolution& sol, const QuadraticForms& forms,
                                    double gamma, int count, std::uint64_t seed,
                                    const MmConfig& restore_config = {});

SolverReport solve_sdr(const CascadedCoefficients& coeffs, double gamma, const AdmmConfig& config,
                       std::uint64_t seed);

SolverReport solve_sdr(const QuadraticForms& forms, double gamma, const AdmmConfig& config,
                       std::uint64_t seed, const SdpBackend& backend);

}  // namespace spooflab

#endif
