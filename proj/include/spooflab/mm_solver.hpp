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

#ifndef SPOOFLAB_MM_SOLVER_HPP
#define SPOOFLAB_MM_SOLVER_HPP

#include "spooflab/power_model.hpp"

#include <optional>
#include <vector>

namespace spooflab {

/// Hermitian PSD matrix w1 u1 u1^H + w2 u2 u2^H kept in factored form.
struct RankTwoForm {
  CVector u1;
  CVector u2;
  double w1 = 0.0;
  double w2 = 0.0;

  int size() const { return static_cast<int>(u1.size()); }
  CVector apply(const CVector& x) const;
  /// x^H (.) x, always real and non-negative.
  double quad(const CVector& x) const;
  CMatrix dense() const;
  RankTwoForm scaled(double factor) const;
};

/// Objective A = Q_C^2 r r^H + Q_C Q_R g g^H and constraint
/// B = Q_R^2 v v^H + Q_C Q_R g g^H of the reflection design problem.
struct QuadraticForms {
  RankTwoForm objective;   // A
  RankTwoForm constraint;  // B

  int size() const { return objective.size(); }
  CMatrix a() const { return objective.dense(); }
  CMatrix b() const { return constraint.dense(); }
};

QuadraticForms build_quadratic_forms(const CascadedCoefficients& coeffs);

/// Largest eigenvalue of a rank-2 form from the 2x2 Gram reduction
/// diag(w)^{1/2} U^H U diag(w)^{1/2}, U = [u1, u2].
double lambda_max_rank2(const RankTwoForm& form);

/// Linearization of the objective and majorization of the constraint
/// around theta_prev, with M = lambda_max(B) I:
///   d  = A theta_prev
///   e  = (M - B) theta_prev
///   c2 = N lambda_max(B) + theta_prev^H (M - B) theta_prev - gamma
/// The step then needs 2 Re{theta^H e} >= c2.
struct SurrogateTerms {
  CVector d;
  CVector e;
  double c2 = 0.0;
  double lambda_max = 0.0;
};

SurrogateTerms surrogate_terms(const CVector& theta_prev, const QuadraticForms& forms, double gamma);

struct ThetaOpt {
  ReflectionVector theta;
  bool degenerate = false;  // some d_n + mu e_n was exactly zero
};

/// theta_n = exp(j arg(d_n + mu e_n)); zero entries get phase 0.
ThetaOpt theta_opt(const CVector& d, const CVector& e, double mu);

struct MmConfig {
  int max_outer_iters = 500;
  double objective_rel_tol = 1e-8;
  double bisection_tol = 1e-10;
  double mu_bracket_growth = 2.0;
  int feasibility_max_iters = 2000;
  // mu is searched in units where lambda_max(A) = lambda_max(B) = 1.
  double mu_cap = 1e12;

  void validate() const;
};

struct BisectionResult {
  double mu = 0.0;
  int evaluations = 0;
  bool monotonicity_violation = false;
};

/// f(mu) = 2 Re{theta_opt(mu)^H e}. Returns the smallest bracketed mu with
/// f(mu) >= c2, tightened until max(1, mu) (f(mu) - c2) <= bisection_tol * max(1, |c2|).
/// Returns mu = 0 when f(0) >= c2. Throws SurrogateInfeasible if growing the
/// bracket from 1 passes mu_cap.
BisectionResult solve_mu_bisection(const CVector& d, const CVector& e, double c2,
                                   const MmConfig& config);

struct MmStep {
  ReflectionVector theta;
  double mu = 0.0;
  bool degenerate = false;
  bool monotonicity_violation = false;
};

/// One majorization-minimization update from a feasible theta_prev.
MmStep mm_step(const CVector& theta_prev, const QuadraticForms& forms, double gamma,
               const MmConfig& config);

/// Runs theta <- exp(j arg((lambda_max(B) I - B) theta)), which never
/// increases theta^H B theta, until theta^H B theta <= gamma. Throws
/// InfeasibleScenario after feasibility_max_iters.
ReflectionVector feasibility_restore(const CVector& theta_init, const QuadraticForms& forms,
                                     double gamma, const MmConfig& config);

/// Optimized reflection vector plus the powers it achieves.
struct SolverReport {
  ReflectionVector theta;
  double obj_clutter = 0.0;   // P_C = theta^H A theta, mW
  double power_target = 0.0;  // P_T = theta^H B theta, mW
  int iterations = 0;
  bool converged = false;
  std::vector<double> mu_trace;   // normalized units
  std::vector<double> obj_trace;  // mW, starting with the restored initial point
  std::vector<double> constraint_trace;  // theta^H B theta per iterate, mW
  int degenerate_steps = 0;
  int monotonicity_violations = 0;
  std::optional<double> upper_bound;  // relaxation bound when available, mW
  double elapsed_seconds = 0.0;
};

/// MM solution: restore feasibility from theta_init (default exp(j arg r)),
/// then iterate mm_step until the relative objective change drops below
/// objective_rel_tol or max_outer_iters is reached.
SolverReport solve_mm(const CascadedCoefficients& coeffs, double gamma, const MmConfig& config,
                      std::optional<CVector> theta_init = std::nullopt);

/// Same, on already built forms (theta_init defaults to exp(j arg u1) of A).
SolverReport solve_mm(const QuadraticForms& forms, double gamma, const MmConfig& config,
                      std::optional<CVector> theta_init = std::nullopt);

}  // namespace spooflab

#endif
