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

#include "spooflab/sdr_solver.hpp"

#include "spooflab/errors.hpp"

#include <lapacke.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace spooflab {

void AdmmConfig::validate() const {
  if (!(step_size > 0.0)) throw std::invalid_argument("ADMM step size must be positive");
  if (max_iters < 1) throw std::invalid_argument("ADMM iteration limit must be positive");
  if (!(residual_tol > 0.0)) throw std::invalid_argument("ADMM residual tolerance must be positive");
  if (randomization_count < 0) throw std::invalid_argument("randomization count must be non-negative");
}

namespace {

// Re Tr(X^H Y) for Hermitian arguments equals Tr(X Y).
double inner(const CMatrix& x, const CMatrix& y) {
  return (x.conjugate().cwiseProduct(y)).sum().real();
}

CMatrix hermitian_part(const CMatrix& y) { return 0.5 * (y + y.adjoint()); }

struct Eigh {
  Eigen::VectorXd values;  // ascending
  CMatrix vectors;
};

// zheevd is several times faster than Eigen's tridiagonal QR at N ~ 100,
// which dominates the ADMM loop.
Eigh eigh(const CMatrix& y) {
  const int n = static_cast<int>(y.rows());
  Eigh out{Eigen::VectorXd(n), hermitian_part(y)};
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                     reinterpret_cast<lapack_complex_double*>(out.vectors.data()), n,
                     out.values.data());
  if (info != 0) throw std::runtime_error("zheevd failed with info " + std::to_string(info));
  return out;
}

}  // namespace

CMatrix project_affine(const CMatrix& y, const CMatrix& b, double gamma) {
  CMatrix x = y;
  x.diagonal().setOnes();
  const double excess = inner(b, x) - gamma;
  if (excess <= 0.0) return x;
  // Moving along offdiag(B) keeps the unit diagonal; that is the only
  // direction left once the diagonal is pinned.
  CMatrix b_off = b;
  b_off.diagonal().setZero();
  const double denom = b_off.squaredNorm();
  if (denom <= 0.0) return x;  // Tr(B X) is fixed by the diagonal
  x -= (excess / denom) * b_off;
  return x;
}

CMatrix project_psd(const CMatrix& y) {
  const Eigh eig = eigh(y);
  const Eigen::VectorXd clipped = eig.values.cwiseMax(0.0);
  const CMatrix& v = eig.vectors;
  return v * clipped.cast<Complex>().asDiagonal() * v.adjoint();
}

SdpSolution AdmmSdpBackend::solve(const QuadraticForms& forms, double gamma,
                                  const AdmmConfig& config) const {
  config.validate();
  if (!(gamma >= 0.0)) throw std::invalid_argument("solve_sdp: gamma must be non-negative");
  const int n = forms.size();

  double scale_a = lambda_max_rank2(forms.objective);
  double scale_b = lambda_max_rank2(forms.constraint);
  if (!(scale_a > 0.0)) scale_a = 1.0;
  if (!(scale_b > 0.0)) scale_b = 1.0;
  const CMatrix a = forms.a() / scale_a;
  const CMatrix b = forms.b() / scale_b;
  const double gamma_n = std::isinf(gamma) ? std::numeric_limits<double>::max() : gamma / scale_b;

  const double rho = config.step_size;
  CMatrix z = CMatrix::Identity(n, n);
  CMatrix u = CMatrix::Zero(n, n);
  CMatrix x = z;

  SdpSolution sol;
  for (int k = 1; k <= config.max_iters; ++k) {
    x = project_affine(z - u + a / rho, b, gamma_n);
    const CMatrix z_prev = z;
    z = project_psd(x + u);
    u += x - z;

    const double scale_primal = std::max({1.0, x.norm(), z.norm()});
    sol.primal_residual = (x - z).norm() / scale_primal;
    sol.dual_residual = rho * (z - z_prev).norm() / std::max(1.0, rho * u.norm());
    sol.iterations = k;
    // X has a unit diagonal, so this is the per-entry part of X - Z that the
    // Frobenius residual can hide at large N.
    const double diag_error = (z.diagonal().array() - 1.0).abs().maxCoeff();
    if (sol.primal_residual <= config.residual_tol && sol.dual_residual <= config.residual_tol &&
        diag_error <= config.residual_tol) {
      sol.converged = true;
      break;
    }
  }

  // D^{-1/2} Z D^{-1/2} stays PSD and has an exact unit diagonal.
  Eigen::VectorXd inv_sqrt(n);
  for (int i = 0; i < n; ++i) {
    const double dii = z(i, i).real();
    sol.raw_diagonal_error = std::max(sol.raw_diagonal_error, std::abs(z(i, i) - Complex(1.0, 0.0)));
    inv_sqrt(i) = dii > 0.0 ? 1.0 / std::sqrt(dii) : 0.0;
  }
  sol.theta_matrix = inv_sqrt.cast<Complex>().asDiagonal() * z * inv_sqrt.cast<Complex>().asDiagonal();
  sol.theta_matrix = hermitian_part(sol.theta_matrix);
  for (int i = 0; i < n; ++i)
    if (inv_sqrt(i) == 0.0) sol.theta_matrix(i, i) = Complex(1.0, 0.0);
  sol.objective = inner(forms.a(), sol.theta_matrix);
  return sol;
}

SdpSolution solve_sdp(const QuadraticForms& forms, double gamma, const AdmmConfig& config) {
  return AdmmSdpBackend{}.solve(forms, gamma, config);
}

SolverReport gaussian_randomization(const SdpSolution& sol, const QuadraticForms& forms,
                                    double gamma, int count, std::uint64_t seed,
                                    const MmConfig& restore_config) {
  if (count < 0) throw std::invalid_argument("randomization count must be non-negative");
  const int n = forms.size();
  if (sol.theta_matrix.rows() != n) throw std::invalid_argument("SDP solution size mismatch");

  const Eigh eig = eigh(sol.theta_matrix);
  const Eigen::VectorXd root = eig.values.cwiseMax(0.0).cwiseSqrt();
  const CMatrix factor = eig.vectors * root.cast<Complex>().asDiagonal();

  SolverReport rep;
  rep.upper_bound = sol.objective;
  rep.iterations = sol.iterations;
  rep.converged = sol.converged;

  bool have_feasible = false;
  double best_feasible = -1.0;
  double best_any = -1.0;
  CVector best_any_theta;

  auto consider = [&](ReflectionVector cand) {
    const double obj = forms.objective.quad(cand.values());
    const double con = forms.constraint.quad(cand.values());
    if (con <= gamma && obj > best_feasible) {
      best_feasible = obj;
      rep.theta = cand;
      have_feasible = true;
    }
    if (obj > best_any) {
      best_any = obj;
      best_any_theta = cand.values();
    }
  };

  if (count == 0) {
    // Eigenvalues come sorted ascending.
    consider(ReflectionVector::phases_of(eig.vectors.col(n - 1)));
  }
  for (int i = 0; i < count; ++i) {
    auto rng = derived_rng(seed, static_cast<std::uint64_t>(i));
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    CVector w(n);
    for (int k = 0; k < n; ++k) w(k) = Complex(normal(rng), normal(rng));
    consider(ReflectionVector::phases_of(factor * w));
  }

  if (!have_feasible) rep.theta = feasibility_restore(best_any_theta, forms, gamma, restore_config);

  rep.obj_clutter = forms.objective.quad(rep.theta.values());
  rep.power_target = forms.constraint.quad(rep.theta.values());
  rep.obj_trace.push_back(rep.obj_clutter);
  rep.constraint_trace.push_back(rep.power_target);
  return rep;
}

SolverReport solve_sdr(const QuadraticForms& forms, double gamma, const AdmmConfig& config,
                       std::uint64_t seed, const SdpBackend& backend) {
  const auto start = std::chrono::steady_clock::now();
  const SdpSolution sol = backend.solve(forms, gamma, config);
  SolverReport rep = gaussian_randomization(sol, forms, gamma, config.randomization_count, seed);
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

SolverReport solve_sdr(const CascadedCoefficients& coeffs, double gamma, const AdmmConfig& config,
                       std::uint64_t seed) {
  return solve_sdr(build_quadratic_forms(coeffs), gamma, config, seed, AdmmSdpBackend{});
}

}  // namespace spooflab
