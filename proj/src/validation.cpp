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

#include "spooflab/validation.hpp"

#include "spooflab/errors.hpp"
#include "spooflab/oracle_bruteforce.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace spooflab {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

CVector random_phasors(std::mt19937_64& rng, int n) {
  CVector x(n);
  for (int i = 0; i < n; ++i) x(i) = std::polar(1.0, uniform(rng, 0.0, 2.0 * kPi));
  return x;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string precise(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// Signed in-plane angle at which a direction shows up in the scan.
double in_plane_angle(const AnglePair& a) {
  return std::asin(std::sin(a.elevation) * std::cos(a.azimuth));
}

double window_max(const SpectrumScan& s, double center, double half_width) {
  double best = -1.0;
  for (std::size_t i = 0; i < s.angles.size(); ++i)
    if (std::abs(s.angles[i] - center) <= half_width + 1e-12) best = std::max(best, s.power[i]);
  return best;
}

CheckResult timed(int id, std::string name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

// ---------------------------------------------------------------- generators

Scenario random_scenario(std::mt19937_64& rng) {
  Scenario s = Scenario::standard();
  const double lambda = s.wavelength();
  s.radar_geom = UpaGeometry::half_wavelength(uniform_int(rng, 2, 6), uniform_int(rng, 2, 6), lambda);
  s.irs_geom = UpaGeometry::half_wavelength(uniform_int(rng, 2, 6), uniform_int(rng, 2, 6), lambda);
  auto direction = [&rng] {
    return AnglePair{uniform(rng, -0.45 * kPi, 0.45 * kPi), uniform(rng, 0.0, 2.0 * kPi)};
  };
  s.angle_ri = direction();
  s.angle_rc = direction();
  s.angle_ci = direction();
  s.dist_ri = uniform(rng, 20.0, 200.0);
  s.dist_rc = uniform(rng, 20.0, 200.0);
  s.dist_ci = uniform(rng, 10.0, 100.0);
  s.ref_gain = std::pow(10.0, uniform(rng, -4.0, -2.0));
  s.clutter_rcs = std::pow(10.0, uniform(rng, 0.0, 1.5));
  const QuadraticForms forms = build_quadratic_forms(cascaded_coefficients(s));
  s.threshold = s.irs_size() * lambda_max_rank2(forms.constraint) * log_uniform(rng, 1e-3, 1.0);
  return s;
}

RankTwoForm random_rank2(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  RankTwoForm f;
  f.u1.resize(n);
  f.u2.resize(n);
  for (int i = 0; i < n; ++i) {
    f.u1(i) = Complex(normal(rng), normal(rng));
    f.u2(i) = Complex(normal(rng), normal(rng));
  }
  f.w1 = log_uniform(rng, 1e-3, 1e3);
  f.w2 = log_uniform(rng, 1e-3, 1e3);
  return f;
}

CascadedCoefficients random_coefficients(std::mt19937_64& rng, int n) {
  CascadedCoefficients c;
  c.g = random_phasors(rng, n);
  c.v = random_phasors(rng, n);
  c.r = random_phasors(rng, n);
  c.q_radar = log_uniform(rng, 1e-3, 1.0);
  c.q_clutter = log_uniform(rng, 1e-3, 1.0);
  return c;
}

SandwichInstance random_sandwich_instance(std::mt19937_64& rng, int n, int levels) {
  SandwichInstance inst;
  inst.forms = build_quadratic_forms(random_coefficients(rng, n));
  // Range of theta^H B theta over the grid; theta_1 is pinned because both
  // forms are invariant to a global phase.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  CVector theta = CVector::Ones(n);
  while (true) {
    const double b = inst.forms.constraint.quad(theta);
    lo = std::min(lo, b);
    hi = std::max(hi, b);
    int pos = n - 1;
    while (pos >= 1) {
      auto& d = digit[static_cast<std::size_t>(pos)];
      d = (d + 1) % levels;
      theta(pos) = std::polar(1.0, 2.0 * kPi * d / levels);
      if (d != 0) break;
      --pos;
    }
    if (pos < 1) break;
  }
  inst.gamma = lo + uniform(rng, 0.2, 0.9) * (hi - lo);
  return inst;
}

// ---------------------------------------------------------------- suites

CheckResult check_expectation_identity(const Scenario& scenario, std::uint64_t seed, int thetas,
                                       int trials) {
  return timed(1, "expectation_identity", [&](CheckResult& r) {
    const CascadedCoefficients coeffs = cascaded_coefficients(scenario);
    Scenario quiet = scenario;
    quiet.noise_power = 0.0;
    double worst_t = 0.0, worst_c = 0.0;
    for (int i = 0; i < thetas; ++i) {
      auto rng = derived_rng(seed, static_cast<std::uint64_t>(i));
      const ReflectionVector theta = ReflectionVector::reflect(random_phasors(rng, coeffs.size()));
      const MonteCarloPower mc =
          monte_carlo_power(quiet, theta, trials, seed + 1'000'003ULL * (i + 1));
      const double pt = mean_power_target(theta, coeffs);
      const double pc = mean_power_clutter(theta, coeffs);
      worst_t = std::max(worst_t, std::abs(mc.target - pt) / pt);
      worst_c = std::max(worst_c, std::abs(mc.clutter - pc) / pc);
    }
    r.passed = worst_t <= 0.02 && worst_c <= 0.02;
    r.detail = "max relative error P_T " + sci(worst_t) + " P_C " + sci(worst_c) +
               " (limit 0.02; " + std::to_string(thetas) + " thetas x " +
               std::to_string(trials) + " trials)";
  });
}

CheckResult check_mm_ascent(std::uint64_t seed, int scenarios) {
  return timed(2, "mm_ascent_feasibility", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    int solved = 0, redrawn = 0, infeasible_iterates = 0, descents = 0, surrogate_failures = 0;
    int active = 0;
    double worst_excess = 0.0, worst_drop = 0.0;
    while (solved < scenarios && redrawn < 10 * scenarios) {
      const Scenario s = random_scenario(rng);
      const QuadraticForms forms = build_quadratic_forms(cascaded_coefficients(s));
      SolverReport rep;
      try {
        rep = solve_mm(forms, s.threshold, MmConfig{});
      } catch (const InfeasibleScenario&) {
        ++redrawn;
        continue;
      } catch (const SurrogateInfeasible&) {
        ++surrogate_failures;
        ++solved;
        continue;
      }
      ++solved;
      if (rep.power_target >= 0.99 * s.threshold) ++active;
      for (double c : rep.constraint_trace) {
        worst_excess = std::max(worst_excess, c / s.threshold - 1.0);
        if (c > s.threshold * (1.0 + 1e-9)) ++infeasible_iterates;
      }
      const double scale = *std::max_element(rep.obj_trace.begin(), rep.obj_trace.end());
      for (std::size_t k = 1; k < rep.obj_trace.size(); ++k) {
        const double drop = rep.obj_trace[k - 1] - rep.obj_trace[k];
        worst_drop = std::max(worst_drop, drop / scale);
        if (drop > 1e-9 * scale) ++descents;
      }
    }
    r.passed = solved == scenarios && infeasible_iterates == 0 && descents == 0 &&
               surrogate_failures == 0;
    r.detail = std::to_string(solved) + " scenarios (" + std::to_string(redrawn) +
               " infeasible redrawn; " + std::to_string(active) +
               " end on an active constraint); infeasible iterates " + std::to_string(infeasible_iterates) +
               " (worst relative excess " + sci(worst_excess) + "); objective drops " +
               std::to_string(descents) + " (worst " + sci(worst_drop) +
               "); surrogate failures " + std::to_string(surrogate_failures);
  });
}

CheckResult check_bound_sandwich(std::uint64_t seed, int instances) {
  return timed(3, "bound_sandwich", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    int violations = 0;
    double worst_bf_over_sdp = 0.0, worst_mm_over_sdp = 0.0, worst_mm_over_bf = 1e300;
    for (int i = 0; i < instances; ++i) {
      const SandwichInstance inst = random_sandwich_instance(rng, 4, 16);
      const BruteForceResult bf = enumerate_best(inst.forms, inst.gamma, 16);
      const SdpSolution sdp = solve_sdp(inst.forms, inst.gamma, AdmmConfig{});
      const SolverReport mm = solve_mm(inst.forms, inst.gamma, MmConfig{});
      const double bound = sdp.objective * (1.0 + 1e-6);
      worst_bf_over_sdp = std::max(worst_bf_over_sdp, bf.objective / sdp.objective);
      worst_mm_over_sdp = std::max(worst_mm_over_sdp, mm.obj_clutter / sdp.objective);
      worst_mm_over_bf = std::min(worst_mm_over_bf, mm.obj_clutter / bf.objective);
      if (bf.objective > bound || mm.obj_clutter > bound || mm.obj_clutter < 0.98 * bf.objective)
        ++violations;
    }
    r.passed = violations == 0;
    r.detail = std::to_string(instances) + " instances; max bf/sdp " + precise(worst_bf_over_sdp) +
               " max mm/sdp " + precise(worst_mm_over_sdp) + " (limit 1+1e-6); min mm/bf " +
               precise(worst_mm_over_bf) + " (limit 0.98); violations " + std::to_string(violations);
  });
}

namespace {

std::map<double, std::map<BaselineKind, ExperimentRow>> by_gamma(
    const std::vector<ExperimentRow>& sweep) {
  std::map<double, std::map<BaselineKind, ExperimentRow>> out;
  for (const auto& row : sweep) out[row.sweep_value][row.solver] = row;
  return out;
}

}  // namespace

CheckResult check_solver_parity(const std::vector<ExperimentRow>& sweep) {
  return timed(4, "solver_parity", [&](CheckResult& r) {
    const auto grid = by_gamma(sweep);
    bool ok = !grid.empty();
    double worst_ratio = 1e300;
    std::ostringstream d;
    for (const auto& [gamma, rows] : grid) {
      const auto mm = rows.find(BaselineKind::OptimizedMm);
      const auto sdr = rows.find(BaselineKind::OptimizedSdr);
      if (mm == rows.end() || sdr == rows.end()) {
        ok = false;
        d << "gamma " << sci(gamma) << ": missing solver row; ";
        continue;
      }
      const ExperimentRow& m = mm->second;
      const ExperimentRow& s = sdr->second;
      const double ratio = m.p_clutter / s.p_clutter;
      const bool feasible = m.p_target <= gamma * (1.0 + 1e-9) && s.p_target <= gamma * (1.0 + 1e-9);
      const bool row_ok = std::isfinite(ratio) && ratio >= 0.9 && feasible;
      ok = ok && row_ok;
      worst_ratio = std::min(worst_ratio, ratio);
      d << "gamma " << sci(gamma) << ": mm/sdr " << sci(ratio) << " P_T mm " << sci(m.p_target)
        << " sdr " << sci(s.p_target) << (row_ok ? "" : " FAIL") << "; ";
    }
    r.passed = ok;
    r.detail = "min mm/sdr " + sci(worst_ratio) + " (limit 0.9); " + d.str();
  });
}

CheckResult check_tradeoff_monotonicity(const std::vector<ExperimentRow>& sweep) {
  return timed(5, "tradeoff_monotonicity", [&](CheckResult& r) {
    std::vector<std::pair<double, double>> mm;
    for (const auto& row : sweep)
      if (row.solver == BaselineKind::OptimizedMm) mm.emplace_back(row.sweep_value, row.p_clutter);
    std::sort(mm.begin(), mm.end());
    bool ok = mm.size() >= 2;
    std::ostringstream d;
    for (std::size_t i = 0; i < mm.size(); ++i) {
      d << sci(mm[i].second) << (i + 1 < mm.size() ? " " : "");
      if (i > 0 && !(mm[i].second >= mm[i - 1].second * (1.0 - 1e-9))) ok = false;
    }
    r.passed = ok;
    r.detail = "MM P_C over gamma grid: " + d.str();
  });
}

CheckResult check_spoofing_scan(const Scenario& scenario, std::uint64_t seed) {
  return timed(6, "spoofing_scan", [&](CheckResult& r) {
    const std::vector<BaselineKind> kinds{BaselineKind::OptimizedMm, BaselineKind::NoIrs,
                                          BaselineKind::RandomPhase};
    const auto scans = run_aoa_scan(scenario, kinds, seed);
    const double target = in_plane_angle(scenario.angle_ri);
    const double clutter = in_plane_angle(scenario.angle_rc);
    const double one_deg = deg_to_rad(1.0);
    std::ostringstream d;
    bool ok = true;
    auto verdict = [&](const char* label, bool pass) {
      d << label << (pass ? " pass" : " FAIL") << "; ";
      ok = ok && pass;
    };

    const SpectrumScan& opt = scans[0].scan;
    if (opt.power.empty()) {
      verdict("optimized scan (solver failed)", false);
    } else {
      const double dom = opt.dominant_angle();
      d << "optimized dominant " << sci(rad_to_deg(dom)) << " deg: ";
      verdict("within 1 deg of clutter", std::abs(dom - clutter) <= one_deg + 1e-12);
      const double at_target = window_max(opt, target, one_deg);
      const double at_clutter = window_max(opt, clutter, one_deg);
      const double gap_db = 10.0 * std::log10(at_clutter / at_target);
      d << "clutter/target gap " << sci(gap_db) << " dB: ";
      verdict("gap >= 20 dB", gap_db >= 20.0);
      d << "target level " << sci(at_target) << " mW: ";
      verdict("below gamma", at_target < scenario.threshold);
    }
    const double bare = scans[1].scan.dominant_angle();
    d << "no_irs dominant " << sci(rad_to_deg(bare)) << " deg: ";
    verdict("within 1 deg of target", std::abs(bare - target) <= one_deg + 1e-12);
    const SpectrumScan& rnd = scans[2].scan;
    const double median = rnd.median();
    const double t_db = 10.0 * std::log10(window_max(rnd, target, one_deg) / median);
    const double c_db = 10.0 * std::log10(window_max(rnd, clutter, one_deg) / median);
    d << "random_phase above median: target " << sci(t_db) << " dB clutter " << sci(c_db) << " dB: ";
    verdict("both >= 10 dB", t_db >= 10.0 && c_db >= 10.0);
    r.passed = ok;
    r.detail = d.str();
    r.detail.resize(r.detail.size() - 2);  // trailing "; "
  });
}

CheckResult check_angle_diff_shape(const Scenario& scenario, std::uint64_t seed) {
  return timed(7, "angle_diff_shape", [&](CheckResult& r) {
    const std::vector<double> deltas{5.0, 30.0, 80.0};
    const auto rows = run_angle_diff_sweep(scenario, deltas, seed);
    bool reachable = true;
    for (const auto& row : rows) reachable = reachable && row.result.status == "ok";
    const double p5 = rows[0].result.p_clutter, p30 = rows[1].result.p_clutter,
                 p80 = rows[2].result.p_clutter;
    r.passed = reachable && p5 < p30 && p80 < p30;
    r.detail = "P_C(5) " + sci(p5) + " P_C(30) " + sci(p30) + " P_C(80) " + sci(p80) +
               (reachable ? "" : " (some deltas not solved)");
  });
}

CheckResult check_lambda_max(std::uint64_t seed, int instances) {
  return timed(8, "lambda_max_rank2", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < instances; ++i) {
      const RankTwoForm f = random_rank2(rng, uniform_int(rng, 1, 128));
      Eigen::SelfAdjointEigenSolver<CMatrix> eig(f.dense(), Eigen::EigenvaluesOnly);
      const double dense = eig.eigenvalues().maxCoeff();
      worst = std::max(worst, std::abs(lambda_max_rank2(f) - dense) / dense);
    }
    r.passed = worst <= 1e-9;
    r.detail = std::to_string(instances) + " forms; max relative error " + sci(worst) +
               " (limit 1e-9)";
  });
}

CheckResult check_admm_certificate(const Scenario& scenario) {
  return timed(9, "admm_certificate", [&](CheckResult& r) {
    const QuadraticForms forms = build_quadratic_forms(cascaded_coefficients(scenario));
    const SdpSolution sol = solve_sdp(forms, scenario.threshold, AdmmConfig{});
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(sol.theta_matrix, Eigen::EigenvaluesOnly);
    const double min_eig = eig.eigenvalues().minCoeff();
    r.passed = sol.primal_residual <= 1e-6 && sol.dual_residual <= 1e-6 &&
               sol.raw_diagonal_error <= 1e-6 && min_eig >= -1e-8;
    r.detail = "primal " + sci(sol.primal_residual) + " dual " + sci(sol.dual_residual) +
               " (limit 1e-6); diagonal error " + sci(sol.raw_diagonal_error) +
               " (limit 1e-6); min eigenvalue " + sci(min_eig) + " (limit -1e-8); iterations " +
               std::to_string(sol.iterations);
  });
}

Scenario reduced_scenario(const Scenario& scenario) {
  Scenario s = scenario;
  s.radar_geom.count_x = s.radar_geom.count_y = 4;
  s.irs_geom.count_x = s.irs_geom.count_y = 4;
  return s;
}

CheckResult check_determinism(const Scenario& scenario, std::uint64_t seed) {
  return timed(10, "determinism", [&](CheckResult& r) {
    const Scenario s = reduced_scenario(scenario);
    const std::vector<BaselineKind> all{BaselineKind::NoIrs, BaselineKind::RandomPhase,
                                        BaselineKind::OptimizedMm, BaselineKind::OptimizedSdr};
    ScanConfig scan;
    scan.epochs = 20;
    const auto gammas = default_gamma_grid();
    const auto deltas = default_delta_grid();
    const std::vector<std::pair<std::string, std::function<std::string()>>> runs{
        {"scan-aoa", [&] { return aoa_scan_table(run_aoa_scan(s, all, seed, scan), s, scan, seed).to_string(); }},
        {"sweep-gamma", [&] { return gamma_sweep_table(run_gamma_sweep(s, gammas, all, seed), s, seed).to_string(); }},
        {"sweep-delta", [&] { return angle_diff_table(run_angle_diff_sweep(s, deltas, seed), s, seed).to_string(); }},
        {"solve", [&] { return run_solve(s, seed).to_string(); }},
    };
    bool ok = true;
    std::ostringstream d;
    for (const auto& [name, run] : runs) {
      const bool same = run() == run();
      ok = ok && same;
      d << name << (same ? " identical" : " DIFFERS") << "; ";
    }
    r.passed = ok;
    r.detail = d.str() + "4x4 arrays";
  });
}

std::vector<CheckResult> run_validation(const Scenario& scenario, std::uint64_t seed,
                                        const std::vector<int>& ids) {
  for (int id : ids)
    if (id < 1 || id > kCheckCount)
      throw std::invalid_argument("unknown check id " + std::to_string(id));
  auto wanted = [&ids](int id) {
    return ids.empty() || std::find(ids.begin(), ids.end(), id) != ids.end();
  };
  std::vector<CheckResult> out;
  if (wanted(1)) out.push_back(check_expectation_identity(scenario, seed));
  if (wanted(2)) out.push_back(check_mm_ascent(seed));
  if (wanted(3)) out.push_back(check_bound_sandwich(seed));
  if (wanted(4) || wanted(5)) {
    const std::vector<BaselineKind> solvers{BaselineKind::OptimizedMm, BaselineKind::OptimizedSdr};
    const auto sweep = run_gamma_sweep(scenario, default_gamma_grid(), solvers, seed);
    if (wanted(4)) out.push_back(check_solver_parity(sweep));
    if (wanted(5)) out.push_back(check_tradeoff_monotonicity(sweep));
  }
  if (wanted(6)) out.push_back(check_spoofing_scan(scenario, seed));
  if (wanted(7)) out.push_back(check_angle_diff_shape(scenario, seed));
  if (wanted(8)) out.push_back(check_lambda_max(seed));
  if (wanted(9)) out.push_back(check_admm_certificate(scenario));
  if (wanted(10)) out.push_back(check_determinism(scenario, seed));
  return out;
}

CsvTable validation_table(const std::vector<CheckResult>& results, std::uint64_t seed) {
  CsvTable t;
  t.metadata.push_back("experiment: validate");
  t.metadata.push_back("seed: " + std::to_string(seed));
  t.header = {"id", "check", "passed", "detail"};
  for (const auto& r : results) {
    std::string detail = r.detail;
    std::replace(detail.begin(), detail.end(), ',', ';');
    t.rows.push_back({std::to_string(r.id), r.name, r.passed ? "1" : "0", detail});
  }
  return t;
}

}  // namespace spooflab
