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

#include "spooflab/mm_solver.hpp"

#include "spooflab/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace spooflab {

CVector RankTwoForm::apply(const CVector& x) const {
  return w1 * u1.dot(x) * u1 + w2 * u2.dot(x) * u2;
}

double RankTwoForm::quad(const CVector& x) const {
  return w1 * std::norm(u1.dot(x)) + w2 * std::norm(u2.dot(x));
}

CMatrix RankTwoForm::dense() const {
  return w1 * u1 * u1.adjoint() + w2 * u2 * u2.adjoint();
}

RankTwoForm RankTwoForm::scaled(double factor) const {
  return {u1, u2, w1 * factor, w2 * factor};
}

QuadraticForms build_quadratic_forms(const CascadedCoefficients& c) {
  const double qcqr = c.q_clutter * c.q_radar;
  return {{c.r, c.g, c.q_clutter * c.q_clutter, qcqr}, {c.v, c.g, c.q_radar * c.q_radar, qcqr}};
}

double lambda_max_rank2(const RankTwoForm& f) {
  // Hermitian 2x2: [[w1 |u1|^2, sqrt(w1 w2) u1^H u2], [.., w2 |u2|^2]]
  const double a = f.w1 * f.u1.squaredNorm();
  const double c = f.w2 * f.u2.squaredNorm();
  const double b = std::sqrt(std::max(f.w1, 0.0) * std::max(f.w2, 0.0)) * std::abs(f.u1.dot(f.u2));
  const double half_diff = 0.5 * (a - c);
  return 0.5 * (a + c) + std::hypot(half_diff, b);
}

SurrogateTerms surrogate_terms(const CVector& theta_prev, const QuadraticForms& forms,
                               double gamma) {
  if (theta_prev.size() != forms.size())
    throw std::invalid_argument("surrogate_terms: theta length does not match the forms");
  SurrogateTerms t;
  t.lambda_max = lambda_max_rank2(forms.constraint);
  t.d = forms.objective.apply(theta_prev);
  const CVector b_theta = forms.constraint.apply(theta_prev);
  t.e = t.lambda_max * theta_prev - b_theta;
  const double n = static_cast<double>(theta_prev.size());
  // theta^H M theta = N lambda_max on the unit-modulus set.
  const double slack_term = t.lambda_max * theta_prev.squaredNorm() - theta_prev.dot(b_theta).real();
  t.c2 = n * t.lambda_max + slack_term - gamma;
  return t;
}

ThetaOpt theta_opt(const CVector& d, const CVector& e, double mu) {
  if (d.size() != e.size()) throw std::invalid_argument("theta_opt: d and e differ in length");
  if (!(mu >= 0.0)) throw std::invalid_argument("theta_opt: mu must be non-negative");
  CVector theta(d.size());
  bool degenerate = false;
  for (Eigen::Index n = 0; n < d.size(); ++n) {
    const Complex z = d(n) + mu * e(n);
    if (z == Complex(0.0, 0.0)) {
      degenerate = true;
      theta(n) = Complex(1.0, 0.0);
    } else {
      theta(n) = z / std::abs(z);
    }
  }
  return {ReflectionVector::reflect(std::move(theta)), degenerate};
}

void MmConfig::validate() const {
  if (max_outer_iters < 1 || feasibility_max_iters < 1)
    throw std::invalid_argument("MM iteration limits must be positive");
  if (!(objective_rel_tol > 0.0) || !(bisection_tol > 0.0))
    throw std::invalid_argument("MM tolerances must be positive");
  if (!(mu_bracket_growth > 1.0)) throw std::invalid_argument("mu bracket growth must exceed 1");
  if (!(mu_cap > 1.0)) throw std::invalid_argument("mu cap must exceed 1");
}

namespace {

// f(mu) = 2 Re{theta_opt(mu)^H e} without materializing theta.
double linear_constraint_value(const CVector& d, const CVector& e, double mu) {
  double acc = 0.0;
  for (Eigen::Index n = 0; n < d.size(); ++n) {
    const Complex z = d(n) + mu * e(n);
    const double mag = std::abs(z);
    const Complex t = mag > 0.0 ? z / mag : Complex(1.0, 0.0);
    acc += (std::conj(t) * e(n)).real();
  }
  return 2.0 * acc;
}

}  // namespace

BisectionResult solve_mu_bisection(const CVector& d, const CVector& e, double c2,
                                   const MmConfig& config) {
  BisectionResult res;
  auto f = [&](double mu) {
    ++res.evaluations;
    return linear_constraint_value(d, e, mu);
  };

  double lo = 0.0;
  double f_lo = f(0.0);
  if (f_lo >= c2) return res;

  double hi = 1.0;
  double f_hi = f(hi);
  while (f_hi < c2) {
    if (f_hi < f_lo) res.monotonicity_violation = true;
    lo = hi;
    f_lo = f_hi;
    hi *= config.mu_bracket_growth;
    if (hi > config.mu_cap)
      throw SurrogateInfeasible("no multiplier up to the bracket cap meets the linearized constraint");
    f_hi = f(hi);
  }

  // The ascent lost against theta_prev is at most mu (f(mu) - c2), so the
  // slack is weighted by mu as well.
  const double tol = config.bisection_tol * std::max(1.0, std::abs(c2));
  constexpr int kGridPoints = 32;
  for (int iter = 0; iter < 400; ++iter) {
    if ((f_hi - c2) * std::max(1.0, hi) <= tol || hi - lo <= 1e-15 * hi) break;
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid < f_lo || f_mid > f_hi) {
      // f is non-decreasing in exact arithmetic; on a violation fall back to
      // a grid scan for the first crossing inside the current bracket.
      res.monotonicity_violation = true;
      double prev = lo;
      double f_prev = f_lo;
      for (int k = 1; k <= kGridPoints; ++k) {
        const double mu = lo + (hi - lo) * k / kGridPoints;
        const double fm = k == kGridPoints ? f_hi : f(mu);
        if (fm >= c2) {
          lo = prev;
          f_lo = f_prev;
          hi = mu;
          f_hi = fm;
          break;
        }
        prev = mu;
        f_prev = fm;
      }
      continue;
    }
    if (f_mid >= c2) {
      hi = mid;
      f_hi = f_mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  res.mu = hi;
  return res;
}

MmStep mm_step(const CVector& theta_prev, const QuadraticForms& forms, double gamma,
               const MmConfig& config) {
  const SurrogateTerms t = surrogate_terms(theta_prev, forms, gamma);
  MmStep step;
  const BisectionResult mu = solve_mu_bisection(t.d, t.e, t.c2, config);
  auto opt = theta_opt(t.d, t.e, mu.mu);
  step.theta = std::move(opt.theta);
  step.degenerate = opt.degenerate;
  step.mu = mu.mu;
  step.monotonicity_violation = mu.monotonicity_violation;
  return step;
}

namespace {

bool is_unit_modulus(const CVector& x) {
  for (Eigen::Index n = 0; n < x.size(); ++n)
    if (std::abs(std::abs(x(n)) - 1.0) > 1e-9) return false;
  return true;
}

}  // namespace

ReflectionVector feasibility_restore(const CVector& theta_init, const QuadraticForms& forms,
                                     double gamma, const MmConfig& config) {
  if (theta_init.size() != forms.size())
    throw std::invalid_argument("feasibility_restore: theta length does not match the forms");
  if (gamma < 0.0) throw InfeasibleScenario("negative detection threshold");

  ReflectionVector theta = is_unit_modulus(theta_init) ? ReflectionVector::reflect(theta_init)
                                                       : ReflectionVector::phases_of(theta_init);
  double value = forms.constraint.quad(theta.values());
  if (value <= gamma) return theta;

  const double lambda = lambda_max_rank2(forms.constraint);
  for (int it = 0; it < config.feasibility_max_iters; ++it) {
    const CVector& x = theta.values();
    theta = ReflectionVector::phases_of(lambda * x - forms.constraint.apply(x));
    const double next = forms.constraint.quad(theta.values());
    if (next <= gamma) return theta;
    // Stalled at a local minimum of theta^H B theta above gamma.
    if (value - next <= 1e-14 * std::max(value, 1e-300)) break;
    value = next;
  }
  throw InfeasibleScenario("could not find a reflection vector meeting the target-power threshold");
}

SolverReport solve_mm(const QuadraticForms& forms, double gamma, const MmConfig& config,
                      std::optional<CVector> theta_init) {
  config.validate();
  if (!(gamma >= 0.0)) throw std::invalid_argument("solve_mm: gamma must be non-negative");
  const auto start = std::chrono::steady_clock::now();

  // Work in units where both forms have unit spectral norm.
  double scale_a = lambda_max_rank2(forms.objective);
  double scale_b = lambda_max_rank2(forms.constraint);
  if (!(scale_a > 0.0)) scale_a = 1.0;
  if (!(scale_b > 0.0)) scale_b = 1.0;
  const QuadraticForms norm{forms.objective.scaled(1.0 / scale_a),
                            forms.constraint.scaled(1.0 / scale_b)};
  const double gamma_n = gamma / scale_b;

  CVector init = theta_init ? *theta_init : ReflectionVector::phases_of(forms.objective.u1).values();
  if (init.size() != forms.size())
    throw std::invalid_argument("solve_mm: initial theta length does not match the forms");

  SolverReport rep;
  rep.theta = feasibility_restore(init, norm, gamma_n, config);
  double obj = norm.objective.quad(rep.theta.values());
  rep.obj_trace.push_back(obj * scale_a);
  rep.constraint_trace.push_back(norm.constraint.quad(rep.theta.values()) * scale_b);

  for (int k = 0; k < config.max_outer_iters; ++k) {
    MmStep step = mm_step(rep.theta.values(), norm, gamma_n, config);
    const double next = norm.objective.quad(step.theta.values());
    rep.theta = std::move(step.theta);
    rep.mu_trace.push_back(step.mu);
    rep.obj_trace.push_back(next * scale_a);
    rep.constraint_trace.push_back(norm.constraint.quad(rep.theta.values()) * scale_b);
    rep.degenerate_steps += step.degenerate ? 1 : 0;
    rep.monotonicity_violations += step.monotonicity_violation ? 1 : 0;
    rep.iterations = k + 1;
    const double change = std::abs(next - obj) / std::max(std::abs(obj), 1e-300);
    obj = next;
    if (change < config.objective_rel_tol) {
      rep.converged = true;
      break;
    }
  }

  rep.obj_clutter = forms.objective.quad(rep.theta.values());
  rep.power_target = forms.constraint.quad(rep.theta.values());
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

SolverReport solve_mm(const CascadedCoefficients& coeffs, double gamma, const MmConfig& config,
                      std::optional<CVector> theta_init) {
  return solve_mm(build_quadratic_forms(coeffs), gamma, config, std::move(theta_init));
}

}  // namespace spooflab
