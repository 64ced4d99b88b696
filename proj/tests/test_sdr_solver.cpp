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

#include "spooflab/errors.hpp"
#include "spooflab/oracle_bruteforce.hpp"
#include "spooflab/sdr_solver.hpp"
#include "spooflab/validation.hpp"
#include "test_support.hpp"

#include <catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>

#include <limits>

using namespace spooflab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double trace_inner(const CMatrix& a, const CMatrix& b) { return (a.adjoint() * b).trace().real(); }

CMatrix random_hermitian(std::mt19937_64& rng, int n) {
  CMatrix m(n, n);
  for (int j = 0; j < n; ++j) m.col(j) = test::random_gaussian(rng, n);
  return 0.5 * (m + m.adjoint());
}

double min_eigenvalue(const CMatrix& m) {
  return Eigen::SelfAdjointEigenSolver<CMatrix>(m).eigenvalues().minCoeff();
}

}  // namespace

TEST_CASE("PSD projection", "[sdr_solver][property]") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const CMatrix y = random_hermitian(rng, 7);
    const CMatrix p = project_psd(y);
    REQUIRE(min_eigenvalue(p) >= -1e-12);
    REQUIRE((project_psd(p) - p).norm() <= 1e-12 * std::max(1.0, p.norm()));
    // Optimality: <Y - P, X - P> <= 0 for any PSD X.
    const CVector w = test::random_gaussian(rng, 7);
    const CMatrix x = w * w.adjoint();
    REQUIRE(trace_inner(y - p, x - p) <= 1e-10 * std::max(1.0, y.norm() * x.norm()));
  }
  const CMatrix psd = CMatrix::Identity(3, 3) * 2.0;
  CHECK((project_psd(psd) - psd).norm() < 1e-14);
}

TEST_CASE("affine projection", "[sdr_solver][property]") {
  std::mt19937_64 rng(2);
  const int n = 6;
  for (int t = 0; t < 20; ++t) {
    const RankTwoForm bf = random_rank2(rng, n);
    const CMatrix b = bf.dense();
    const CMatrix y = random_hermitian(rng, n);
    const double gamma = 0.2 * n * lambda_max_rank2(bf);
    const CMatrix p = project_affine(y, b, gamma);
    for (int i = 0; i < n; ++i) REQUIRE(std::abs(p(i, i) - Complex(1.0, 0.0)) <= 1e-12);
    REQUIRE(trace_inner(b, p) <= gamma * (1 + 1e-10) + 1e-12);
    REQUIRE((project_affine(p, b, gamma) - p).norm() <= 1e-10 * p.norm());

    // Any other member of the set is no closer to y.
    CMatrix other = random_hermitian(rng, n);
    other = project_affine(other, b, gamma);
    REQUIRE(trace_inner(y - p, other - p) <= 1e-9 * std::max(1.0, y.norm() * other.norm()));
  }
}

TEST_CASE("SDP with a single element", "[sdr_solver]") {
  CVector one = CVector::Ones(1);
  const QuadraticForms f{{one, one, 2.0, 1.0}, {one, one, 0.5, 0.25}};
  const SdpSolution sol = solve_sdp(f, 1.0, AdmmConfig{});
  CHECK(sol.converged);
  CHECK(std::abs(sol.theta_matrix(0, 0) - Complex(1.0, 0.0)) < 1e-12);
  CHECK_THAT(sol.objective, WithinRel(3.0, 1e-9));

  const SolverReport ok = solve_sdr(f, 1.0, AdmmConfig{}, 1, AdmmSdpBackend{});
  CHECK_THAT(ok.obj_clutter, WithinRel(3.0, 1e-12));
  CHECK_THROWS_AS(solve_sdr(f, 0.5, AdmmConfig{}, 1, AdmmSdpBackend{}), InfeasibleScenario);
}

TEST_CASE("relaxation bounds unit-modulus points when the constraint is slack", "[sdr_solver]") {
  std::mt19937_64 rng(3);
  const int n = 8;
  const RankTwoForm a = random_rank2(rng, n), b = random_rank2(rng, n);
  const QuadraticForms f{a, b};
  const SdpSolution sol = solve_sdp(f, kInf, AdmmConfig{});
  CHECK(sol.converged);
  for (int t = 0; t < 200; ++t)
    REQUIRE(a.quad(test::random_unit_modulus(rng, n)) <= sol.objective * (1 + 1e-6));
  const SolverReport mm = solve_mm(f, kInf, MmConfig{});
  CHECK(mm.obj_clutter <= sol.objective * (1 + 1e-6));
}

TEST_CASE("SDP dominates brute force and MM at N = 4", "[sdr_solver]") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 5; ++t) {
    const SandwichInstance inst = random_sandwich_instance(rng, 4, 16);
    const SdpSolution sol = solve_sdp(inst.forms, inst.gamma, AdmmConfig{});
    const BruteForceResult bf = enumerate_best(inst.forms, inst.gamma, 16);
    const SolverReport mm = solve_mm(inst.forms, inst.gamma, MmConfig{});
    CHECK(sol.converged);
    CHECK(bf.objective <= sol.objective * (1 + 1e-6));
    CHECK(mm.obj_clutter <= sol.objective * (1 + 1e-6));
  }
}

TEST_CASE("SDP solution certificate on the default scenario", "[sdr_solver]") {
  const Scenario s = Scenario::standard();
  const QuadraticForms f = build_quadratic_forms(cascaded_coefficients(s));
  const SdpSolution sol = solve_sdp(f, s.threshold, AdmmConfig{});
  CHECK(sol.converged);
  CHECK(sol.primal_residual <= 1e-7);
  CHECK(sol.dual_residual <= 1e-7);
  CHECK(sol.raw_diagonal_error <= 1e-7);
  CHECK(min_eigenvalue(sol.theta_matrix) >= -1e-8);
  for (int i = 0; i < f.size(); ++i) CHECK(std::abs(sol.theta_matrix(i, i) - Complex(1.0, 0.0)) < 1e-12);
  CHECK(trace_inner(f.b(), sol.theta_matrix) <= s.threshold * (1 + 1e-6));

  const SolverReport rep = gaussian_randomization(sol, f, s.threshold, 1000, 5);
  CHECK(rep.power_target <= s.threshold);
  REQUIRE(rep.upper_bound.has_value());
  CHECK(rep.obj_clutter <= *rep.upper_bound * (1 + 1e-6));
  CHECK(rep.obj_clutter >= 0.9 * *rep.upper_bound);
}

TEST_CASE("randomization of a rank-one solution recovers it", "[sdr_solver]") {
  std::mt19937_64 rng(6);
  const int n = 10;
  const CVector star = test::random_unit_modulus(rng, n);
  SdpSolution sol;
  sol.theta_matrix = star * star.adjoint();
  const QuadraticForms f{{star, star, 1.0, 0.0}, random_rank2(rng, n)};
  for (int count : {0, 1, 25}) {
    const SolverReport rep = gaussian_randomization(sol, f, kInf, count, 9);
    const CVector& th = rep.theta.values();
    const Complex phase = th(0) / star(0);
    // Clipped round-off eigenvalues enter through their square roots.
    CHECK((th - phase * star).norm() < 1e-6);
    CHECK_THAT(rep.obj_clutter, WithinRel(double(n) * n, 1e-9));
  }
}

TEST_CASE("count zero uses the dominant eigenvector", "[sdr_solver]") {
  std::mt19937_64 rng(7);
  const int n = 6;
  const CVector u = test::random_gaussian(rng, n);
  const CVector w = test::random_gaussian(rng, n);
  SdpSolution sol;
  sol.theta_matrix = 5.0 * u * u.adjoint() + 0.1 * w * w.adjoint();
  const QuadraticForms f{random_rank2(rng, n), random_rank2(rng, n)};
  const SolverReport rep = gaussian_randomization(sol, f, kInf, 0, 1);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sol.theta_matrix);
  const CVector top = es.eigenvectors().col(n - 1);
  const CVector expected = ReflectionVector::phases_of(top).values();
  const Complex phase = rep.theta.values()(0) / expected(0);
  CHECK((rep.theta.values() - phase * expected).norm() < 1e-9);
  CHECK_THROWS_AS(gaussian_randomization(sol, f, kInf, -1, 1), std::invalid_argument);
}

TEST_CASE("randomization falls back to restoration", "[sdr_solver]") {
  std::mt19937_64 rng(8);
  const int n = 5;
  const CVector star = test::random_unit_modulus(rng, n);
  SdpSolution sol;
  sol.theta_matrix = star * star.adjoint();
  // The only candidate (star) violates the constraint by construction.
  const QuadraticForms f{{star, star, 1.0, 0.0}, {star, star, 1.0, 0.0}};
  const double gamma = 0.5 * n * n;
  const SolverReport rep = gaussian_randomization(sol, f, gamma, 3, 1);
  CHECK(rep.power_target <= gamma);
}

TEST_CASE("solve_sdr is deterministic and feasible", "[sdr_solver]") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 3; ++t) {
    const SandwichInstance inst = random_sandwich_instance(rng, 6, 4);
    AdmmConfig cfg;
    cfg.randomization_count = 200;
    const SolverReport a = solve_sdr(inst.forms, inst.gamma, cfg, 42, AdmmSdpBackend{});
    const SolverReport b = solve_sdr(inst.forms, inst.gamma, cfg, 42, AdmmSdpBackend{});
    CHECK((a.theta.values() - b.theta.values()).norm() == 0.0);
    CHECK(a.obj_clutter == b.obj_clutter);
    CHECK(a.power_target <= inst.gamma);
  }
}

TEST_CASE("ADMM configuration checks", "[sdr_solver]") {
  AdmmConfig c;
  CHECK_NOTHROW(c.validate());
  c.step_size = 0.0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = AdmmConfig{};
  c.max_iters = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c = AdmmConfig{};
  c.randomization_count = -1;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  CVector one = CVector::Ones(1);
  const QuadraticForms f{{one, one, 1.0, 0.0}, {one, one, 1.0, 0.0}};
  CHECK_THROWS_AS(solve_sdp(f, -1.0, AdmmConfig{}), std::invalid_argument);
  SdpSolution wrong;
  wrong.theta_matrix = CMatrix::Identity(3, 3);
  CHECK_THROWS_AS(gaussian_randomization(wrong, f, 1.0, 1, 1), std::invalid_argument);
}

TEST_CASE("non-convergence is reported", "[sdr_solver]") {
  std::mt19937_64 rng(10);
  const SandwichInstance inst = random_sandwich_instance(rng, 6, 4);
  AdmmConfig cfg;
  cfg.max_iters = 2;
  const SdpSolution sol = solve_sdp(inst.forms, inst.gamma, cfg);
  CHECK_FALSE(sol.converged);
  CHECK(sol.iterations == 2);
}
