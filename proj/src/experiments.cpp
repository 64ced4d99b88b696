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

#include "spooflab/experiments.hpp"

#include "spooflab/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace spooflab {

namespace {

std::string printf_string(const char* fmt, double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value);
  return buf;
}

std::string fixed4(double value) {
  // Avoid "-0.0000" for values that round to zero.
  if (std::abs(value) < 5e-5) value = 0.0;
  return printf_string("%.4f", value);
}

bool near(double a, double b) { return std::abs(a - b) < 1e-9; }

std::string azimuth_label(double azimuth) { return near(azimuth, kPi) ? "pi" : "0"; }

std::string describe_angle(const AnglePair& a) {
  return fixed4(rad_to_deg(a.elevation)) + " deg / " + fixed4(rad_to_deg(a.azimuth)) + " deg";
}

}  // namespace

std::string format_power(double mw) { return printf_string("%.9e", mw); }
std::string format_angle(double degrees) { return fixed4(degrees); }
std::string format_length(double m) { return fixed4(m); }

std::string CsvTable::to_string() const {
  std::ostringstream out;
  for (const auto& line : metadata) out << "# " << line << '\n';
  auto emit = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
    out << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
  return out.str();
}

void CsvTable::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << to_string();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::vector<std::string> scenario_metadata(const Scenario& s) {
  auto geom = [](const UpaGeometry& g) {
    return std::to_string(g.count_x) + "x" + std::to_string(g.count_y) + " UPA, spacing " +
           printf_string("%.6g", g.spacing) + " m";
  };
  return {
      "radar: " + geom(s.radar_geom),
      "irs: " + geom(s.irs_geom),
      "wavelength_m: " + printf_string("%.6g", s.wavelength()),
      "angle_ri (elevation / azimuth): " + describe_angle(s.angle_ri),
      "angle_rc (elevation / azimuth): " + describe_angle(s.angle_rc),
      "angle_ci (elevation / azimuth): " + describe_angle(s.angle_ci),
      "distances_m (ri rc ci): " + fixed4(s.dist_ri) + " " + fixed4(s.dist_rc) + " " +
          fixed4(s.dist_ci),
      "ref_gain_db: " + printf_string("%.4f", 10.0 * std::log10(s.ref_gain)),
      "clutter_rcs_dbsm: " + printf_string("%.4f", 10.0 * std::log10(s.clutter_rcs)),
      "target_rcs_dbsm: " +
          (s.target_rcs > 0.0 ? printf_string("%.4f", 10.0 * std::log10(s.target_rcs)) : "-inf"),
      "noise_power_mw: " + format_power(s.noise_power),
      "threshold_mw: " + format_power(s.threshold),
  };
}

// ---------------------------------------------------------------- AoA scan

std::vector<AoaScanResult> run_aoa_scan(const Scenario& scenario,
                                        std::span<const BaselineKind> kinds, std::uint64_t seed,
                                        const ScanConfig& config,
                                        const SolverSettings& settings) {
  std::vector<AoaScanResult> out;
  for (const BaselineKind kind : kinds) {
    AoaScanResult res{kind, {}, "ok"};
    std::optional<ReflectionVector> theta;
    if (kind == BaselineKind::OptimizedMm || kind == BaselineKind::OptimizedSdr) {
      try {
        theta = make_theta(kind, scenario, seed, settings);
      } catch (const InfeasibleScenario&) {
        res.status = "infeasible";
      } catch (const SurrogateInfeasible&) {
        res.status = "surrogate_infeasible";
      }
    }
    if (res.status == "ok") res.scan = epoch_averaged_scan(scenario, kind, theta, config, seed);
    out.push_back(std::move(res));
  }
  return out;
}

CsvTable aoa_scan_table(const std::vector<AoaScanResult>& results, const Scenario& scenario,
                        const ScanConfig& config, std::uint64_t seed) {
  CsvTable t;
  t.metadata.push_back("experiment: aoa_scan");
  for (auto& line : scenario_metadata(scenario)) t.metadata.push_back(std::move(line));
  t.metadata.push_back("epochs: " + std::to_string(config.epochs));
  t.metadata.push_back("seed: " + std::to_string(seed));
  t.metadata.push_back("spectrum: Bartlett a^H R a / M^2, in-plane scan (azimuth 0)");
  t.header = {"kind", "angle_deg", "power_mw", "peak", "status"};

  const std::vector<double> grid = angle_grid(config.start, config.stop, config.step);
  for (const auto& res : results) {
    const std::string kind = to_string(res.kind);
    if (res.scan.power.empty()) {
      for (double a : grid)
        t.rows.push_back({kind, format_angle(rad_to_deg(a)), "nan", "0", res.status});
      continue;
    }
    std::size_t next_peak = 0;
    for (std::size_t i = 0; i < res.scan.angles.size(); ++i) {
      const double a = res.scan.angles[i];
      bool peak = false;
      if (next_peak < res.scan.peak_angles.size() && res.scan.peak_angles[next_peak] == a) {
        peak = true;
        ++next_peak;
      }
      t.rows.push_back({kind, format_angle(rad_to_deg(a)), format_power(res.scan.power[i]),
                        peak ? "1" : "0", res.status});
    }
  }
  return t;
}

// ------------------------------------------------------------- gamma sweep

std::vector<double> default_gamma_grid() { return {1e-8, 3e-8, 1e-7, 3e-7, 1e-6}; }

namespace {

ExperimentRow solve_row(const Scenario& scenario, BaselineKind kind, std::uint64_t seed,
                        const SolverSettings& settings) {
  ExperimentRow row;
  row.solver = kind;
  row.seed = seed;
  const CascadedCoefficients coeffs = cascaded_coefficients(scenario);
  const double gamma = scenario.threshold;
  try {
    switch (kind) {
      case BaselineKind::OptimizedMm: {
        const SolverReport rep = solve_mm(coeffs, gamma, settings.mm);
        row.p_target = mean_power_target(rep.theta, coeffs);
        row.p_clutter = mean_power_clutter(rep.theta, coeffs);
        row.iterations = rep.iterations;
        if (!rep.converged) row.status = "not_converged";
        break;
      }
      case BaselineKind::OptimizedSdr: {
        const SolverReport rep = solve_sdr(coeffs, gamma, settings.admm, seed);
        row.p_target = mean_power_target(rep.theta, coeffs);
        row.p_clutter = mean_power_clutter(rep.theta, coeffs);
        row.iterations = rep.iterations;
        if (!rep.converged) row.status = "not_converged";
        break;
      }
      case BaselineKind::NoIrs:
      case BaselineKind::RandomPhase: {
        const ReflectionVector theta = make_theta(kind, scenario, seed, settings);
        row.p_target = mean_power_target(theta, coeffs);
        row.p_clutter = mean_power_clutter(theta, coeffs);
        break;
      }
    }
    if (row.p_target > gamma * (1.0 + 1e-9)) row.status = "above_threshold";
  } catch (const InfeasibleScenario&) {
    row.status = "infeasible";
    row.p_target = row.p_clutter = std::nan("");
  } catch (const SurrogateInfeasible&) {
    row.status = "surrogate_infeasible";
    row.p_target = row.p_clutter = std::nan("");
  }
  return row;
}

}  // namespace

std::vector<ExperimentRow> run_gamma_sweep(const Scenario& scenario,
                                           std::span<const double> gammas,
                                           std::span<const BaselineKind> kinds,
                                           std::uint64_t seed, const SolverSettings& settings) {
  if (gammas.empty()) throw std::invalid_argument("gamma sweep needs at least one value");
  for (double g : gammas)
    if (!(g > 0.0) || !std::isfinite(g))
      throw std::invalid_argument("gamma values must be positive and finite");
  std::vector<ExperimentRow> rows;
  for (double g : gammas) {
    Scenario s = scenario;
    s.threshold = g;
    for (BaselineKind kind : kinds) {
      ExperimentRow row = solve_row(s, kind, seed, settings);
      row.sweep_value = g;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

CsvTable gamma_sweep_table(const std::vector<ExperimentRow>& rows, const Scenario& scenario,
                           std::uint64_t seed) {
  CsvTable t;
  t.metadata.push_back("experiment: gamma_sweep");
  for (auto& line : scenario_metadata(scenario)) t.metadata.push_back(std::move(line));
  t.metadata.push_back("seed: " + std::to_string(seed));
  t.header = {"gamma_mw", "solver", "p_target_mw", "p_clutter_mw", "iterations", "seed", "status"};
  for (const auto& r : rows)
    t.rows.push_back({format_power(r.sweep_value), to_string(r.solver), format_power(r.p_target),
                      format_power(r.p_clutter), std::to_string(r.iterations),
                      std::to_string(r.seed), r.status});
  return t;
}

// ------------------------------------------------------------- delta sweep

GeometryLayout derive_layout(const Scenario& s) {
  for (const AnglePair* a : {&s.angle_ri, &s.angle_rc, &s.angle_ci})
    if (!near(a->azimuth, 0.0) && !near(a->azimuth, kPi))
      throw UnsupportedLayout("in-plane layout needs azimuths of 0 or pi");
  // In-plane x of a direction is sin(elevation) cos(azimuth); the IRS x-axis
  // is mirrored, hence the sign flip on the clutter offset.
  GeometryLayout g;
  const double sign_ri = near(s.angle_ri.azimuth, kPi) ? -1.0 : 1.0;
  g.target = {sign_ri * s.dist_ri * std::sin(s.angle_ri.elevation),
              s.dist_ri * std::cos(s.angle_ri.elevation)};
  const double sign_ci = near(s.angle_ci.azimuth, kPi) ? -1.0 : 1.0;
  g.clutter = {g.target.x - sign_ci * s.dist_ci * std::sin(s.angle_ci.elevation),
               g.target.z - s.dist_ci * std::cos(s.angle_ci.elevation)};
  return g;
}

double compute_delta_diff(const Scenario& s) {
  const double ri = rad_to_deg(s.angle_ri.elevation);
  const double ci = rad_to_deg(s.angle_ci.elevation);
  if (near(s.angle_ri.azimuth, kPi) && near(s.angle_ci.azimuth, 0.0)) return ri + ci;
  if (near(s.angle_ri.azimuth, kPi) && near(s.angle_ci.azimuth, kPi)) return ci - ri;
  throw UnsupportedLayout("angle difference is defined only for azimuths (pi, 0) and (pi, pi)");
}

std::optional<Scenario> scenario_for_delta(const Scenario& base, double delta_deg) {
  if (!std::isfinite(delta_deg) || delta_deg < 0.0) return std::nullopt;
  if (!near(base.angle_ri.azimuth, kPi))
    throw UnsupportedLayout("the angle-difference sweep needs the target at azimuth pi");
  const GeometryLayout layout = derive_layout(base);
  const double height = layout.target.z - layout.clutter.z;
  if (!(height > 0.0) || !(layout.clutter.z > 0.0)) return std::nullopt;

  const double ri_deg = rad_to_deg(base.angle_ri.elevation);
  const bool far_side = delta_deg >= ri_deg;
  const double ci_deg = far_side ? delta_deg - ri_deg : delta_deg + ri_deg;
  if (ci_deg >= 90.0) return std::nullopt;
  const double ci = deg_to_rad(ci_deg);
  const double offset = height * std::tan(ci);
  const Point2 clutter{far_side ? layout.target.x - offset : layout.target.x + offset,
                       layout.clutter.z};
  const double d_rc = std::hypot(clutter.x, clutter.z);
  if (!(d_rc > 0.0)) return std::nullopt;

  Scenario s = base;
  s.angle_ci = {ci, far_side ? 0.0 : kPi};
  s.dist_ci = height / std::cos(ci);
  s.dist_rc = d_rc;
  s.angle_rc = {std::atan2(std::abs(clutter.x), clutter.z), clutter.x < 0.0 ? kPi : 0.0};
  return s;
}

std::vector<double> default_delta_grid() {
  std::vector<double> out;
  for (int d = 5; d <= 85; d += 5) out.push_back(d);
  return out;
}

std::vector<DeltaSweepRow> run_angle_diff_sweep(const Scenario& scenario,
                                                std::span<const double> deltas,
                                                std::uint64_t seed,
                                                const SolverSettings& settings) {
  std::vector<DeltaSweepRow> rows;
  for (double delta : deltas) {
    DeltaSweepRow row;
    row.delta_deg = delta;
    row.result.sweep_value = delta;
    row.result.seed = seed;
    row.scenario = scenario_for_delta(scenario, delta);
    if (!row.scenario) {
      row.result.status = "unreachable";
      row.result.p_target = row.result.p_clutter = std::nan("");
    } else {
      row.layout = derive_layout(*row.scenario);
      const double sweep = row.result.sweep_value;
      row.result = solve_row(*row.scenario, BaselineKind::OptimizedMm, seed, settings);
      row.result.sweep_value = sweep;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

CsvTable angle_diff_table(const std::vector<DeltaSweepRow>& rows, const Scenario& scenario,
                          std::uint64_t seed) {
  CsvTable t;
  t.metadata.push_back("experiment: angle_diff_sweep");
  for (auto& line : scenario_metadata(scenario)) t.metadata.push_back(std::move(line));
  const GeometryLayout base = derive_layout(scenario);
  t.metadata.push_back("layout: radar at (0, 0) m with broadside +z; IRS normal -z, IRS x-axis "
                       "along global -x");
  t.metadata.push_back("layout: target at (" + format_length(base.target.x) + ", " +
                       format_length(base.target.z) + ") m; clutter slides along x at z = " +
                       format_length(base.clutter.z) + " m from (" +
                       format_length(base.clutter.x) + ", " + format_length(base.clutter.z) +
                       ") m");
  t.metadata.push_back("layout: delta >= theta_ri puts the clutter on the far side (azimuth 0), "
                       "smaller delta on the radar side (azimuth pi)");
  t.metadata.push_back("solver: optimized_mm");
  t.metadata.push_back("seed: " + std::to_string(seed));
  t.header = {"delta_deg",  "theta_ci_deg", "eta_ci", "clutter_x_m", "clutter_z_m",
              "d_rc_m",     "d_ci_m",       "theta_rc_deg", "eta_rc", "p_target_mw",
              "p_clutter_mw", "iterations",  "seed",   "status"};
  for (const auto& r : rows) {
    std::vector<std::string> fields{format_angle(r.delta_deg)};
    if (r.scenario) {
      const Scenario& s = *r.scenario;
      fields.insert(fields.end(),
                    {format_angle(rad_to_deg(s.angle_ci.elevation)), azimuth_label(s.angle_ci.azimuth),
                     format_length(r.layout.clutter.x), format_length(r.layout.clutter.z),
                     format_length(s.dist_rc), format_length(s.dist_ci),
                     format_angle(rad_to_deg(s.angle_rc.elevation)),
                     azimuth_label(s.angle_rc.azimuth)});
    } else {
      fields.insert(fields.end(), {"nan", "", "nan", "nan", "nan", "nan", "nan", ""});
    }
    fields.insert(fields.end(),
                  {format_power(r.result.p_target), format_power(r.result.p_clutter),
                   std::to_string(r.result.iterations), std::to_string(r.result.seed),
                   r.result.status});
    t.rows.push_back(std::move(fields));
  }
  return t;
}

// ------------------------------------------------------------- single solve

CsvTable run_solve(const Scenario& scenario, std::uint64_t seed, const SolverSettings& settings) {
  CsvTable t;
  t.metadata.push_back("experiment: solve");
  for (auto& line : scenario_metadata(scenario)) t.metadata.push_back(std::move(line));
  t.metadata.push_back("seed: " + std::to_string(seed));
  t.header = {"solver",       "gamma_mw",   "p_target_mw", "p_clutter_mw",
              "upper_bound_mw", "iterations", "converged",   "status"};
  const CascadedCoefficients coeffs = cascaded_coefficients(scenario);
  const double gamma = scenario.threshold;
  for (BaselineKind kind : {BaselineKind::OptimizedMm, BaselineKind::OptimizedSdr}) {
    std::vector<std::string> row{to_string(kind), format_power(gamma)};
    try {
      const SolverReport rep = kind == BaselineKind::OptimizedMm
                                   ? solve_mm(coeffs, gamma, settings.mm)
                                   : solve_sdr(coeffs, gamma, settings.admm, seed);
      const double pt = mean_power_target(rep.theta, coeffs);
      row.insert(row.end(),
                 {format_power(pt), format_power(mean_power_clutter(rep.theta, coeffs)),
                  rep.upper_bound ? format_power(*rep.upper_bound) : "",
                  std::to_string(rep.iterations), rep.converged ? "1" : "0",
                  pt > gamma * (1.0 + 1e-9) ? "above_threshold" : "ok"});
    } catch (const InfeasibleScenario&) {
      row.insert(row.end(), {"nan", "nan", "", "0", "0", "infeasible"});
    } catch (const SurrogateInfeasible&) {
      row.insert(row.end(), {"nan", "nan", "", "0", "0", "surrogate_infeasible"});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace spooflab
