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
#include "spooflab/experiments.hpp"
#include "spooflab/scenario_io.hpp"
#include "spooflab/validation.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace spooflab;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

std::size_t count_data_rows(const CsvTable& t) { return t.rows.size(); }

}  // namespace

TEST_CASE("empty config gives the default scenario", "[scenario_io]") {
  const Scenario s = parse_scenario("");
  const Scenario d = Scenario::standard();
  CHECK(s.radar_size() == 64);
  CHECK(s.irs_size() == 121);
  CHECK(s.wavelength() == 0.05);
  CHECK(s.dist_ri == 100.0);
  CHECK(s.dist_rc == 97.0);
  CHECK(s.dist_ci == 36.0);
  CHECK_THAT(s.ref_gain, WithinRel(1e-3, 1e-12));
  CHECK_THAT(s.clutter_rcs, WithinRel(5.0119, 1e-4));
  CHECK(s.threshold == 1e-7);
  CHECK(s.angle_ri.elevation == d.angle_ri.elevation);
  CHECK(s.angle_ci.azimuth == d.angle_ci.azimuth);
  CHECK(load_scenario("").dist_ri == 100.0);
}

TEST_CASE("unit conversions", "[scenario_io]") {
  CHECK_THAT(parse_scenario("ref_gain_db = -30").ref_gain, WithinRel(1e-3, 1e-12));
  CHECK_THAT(parse_scenario("clutter_rcs_dbsm = 7").clutter_rcs, WithinRel(std::pow(10.0, 0.7), 1e-12));
  CHECK_THAT(db_to_linear(10.0), WithinRel(10.0, 1e-15));

  const Scenario s = parse_scenario(
      "# comment\n"
      "\n"
      "radar_nx = 2\nradar_ny = 3\n"
      "irs_nx = 4  \n irs_ny=5\n"
      "ri_azimuth_deg = 0\nri_elevation_deg = 10\n"
      "wavelength_m = 0.1\n"
      "threshold_mw = 2e-6\n");
  CHECK(s.radar_size() == 6);
  CHECK(s.irs_size() == 20);
  CHECK_THAT(s.angle_ri.elevation, WithinRel(deg_to_rad(10.0), 1e-15));
  CHECK(s.angle_ri.azimuth == 0.0);
  CHECK(s.radar_geom.spacing == 0.05);
  CHECK(s.irs_geom.wavelength == 0.1);
  CHECK(s.threshold == 2e-6);
}

TEST_CASE("config errors carry line numbers", "[scenario_io]") {
  CHECK(parse_error_line("radar_nx = 4\nbogus_key = 1\n") == 2);
  CHECK(parse_error_line("\n\nradar_nx 4\n") == 3);
  CHECK(parse_error_line("dist_ri_m = abc") == 1);
  CHECK(parse_error_line("dist_ri_m = -3") == 1);
  CHECK(parse_error_line("radar_nx = 0") == 1);
  CHECK(parse_error_line("ri_elevation_deg = 95") == 1);
  CHECK(parse_error_line("threshold_mw =") == 1);
  CHECK(parse_error_line("dist_ci_m = 1\ndist_ci_m = 2") == 2);
  CHECK_THROWS_AS(load_scenario("/nonexistent/spooflab.cfg"), ParseError);
  CHECK_THROWS_WITH(parse_scenario("x = 1"), ContainsSubstring("line 1"));
}

TEST_CASE("number formatting", "[experiments]") {
  CHECK(format_power(1e-7) == "1.000000000e-07");
  CHECK(format_power(std::nan("")) == "nan");
  CHECK(format_angle(-52.0) == "-52.0000");
  CHECK(format_angle(-1e-9) == "0.0000");
  CHECK(format_length(97.123456) == "97.1235");
}

TEST_CASE("CSV rendering", "[experiments]") {
  CsvTable t;
  t.metadata = {"seed: 1"};
  t.header = {"a", "b"};
  t.rows = {{"1", "2"}, {"3", "4"}};
  CHECK(t.to_string() == "# seed: 1\na,b\n1,2\n3,4\n");

  const std::string path = "spooflab_test_table.csv";
  t.write(path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == t.to_string());
  std::remove(path.c_str());
  CHECK_THROWS_AS(t.write("/nonexistent/dir/out.csv"), std::runtime_error);
}

TEST_CASE("angle difference", "[experiments]") {
  Scenario s = Scenario::standard();
  CHECK_THAT(compute_delta_diff(s), WithinAbs(74.8, 1e-9));

  s.angle_ri = AnglePair::from_degrees(30.0, 180.0);
  s.angle_ci = AnglePair::from_degrees(22.0, 0.0);
  CHECK_THAT(compute_delta_diff(s), WithinAbs(52.0, 1e-9));

  s.angle_ci = AnglePair::from_degrees(30.0, 180.0);
  CHECK_THAT(compute_delta_diff(s), WithinAbs(0.0, 1e-9));

  s.angle_ci = AnglePair::from_degrees(30.0, 90.0);
  CHECK_THROWS_AS(compute_delta_diff(s), UnsupportedLayout);
  CHECK_THROWS_AS(derive_layout(s), UnsupportedLayout);
  s = Scenario::standard();
  s.angle_ri = AnglePair::from_degrees(30.0, 0.0);
  CHECK_THROWS_AS(compute_delta_diff(s), UnsupportedLayout);
}

TEST_CASE("default layout", "[experiments]") {
  const GeometryLayout g = derive_layout(Scenario::standard());
  CHECK(g.radar.x == 0.0);
  CHECK(g.radar.z == 0.0);
  CHECK_THAT(g.target.x, WithinAbs(-50.0, 1e-9));
  CHECK_THAT(g.target.z, WithinAbs(86.6025, 1e-4));
  const double d_ci = std::hypot(g.target.x - g.clutter.x, g.target.z - g.clutter.z);
  CHECK_THAT(d_ci, WithinRel(36.0, 1e-12));
  CHECK_THAT(std::hypot(g.clutter.x, g.clutter.z), WithinAbs(97.0, 0.5));
}

TEST_CASE("swept scenarios realize their angle difference", "[experiments][property]") {
  const Scenario base = Scenario::standard();
  const GeometryLayout g0 = derive_layout(base);
  for (double delta : default_delta_grid()) {
    const auto s = scenario_for_delta(base, delta);
    if (!s) continue;
    CHECK_THAT(compute_delta_diff(*s), WithinAbs(delta, 1e-9));
    const GeometryLayout g = derive_layout(*s);
    CHECK_THAT(g.clutter.z, WithinAbs(g0.clutter.z, 1e-9));
    CHECK_THAT(g.target.x, WithinAbs(g0.target.x, 1e-9));
    CHECK_THAT(std::hypot(g.clutter.x, g.clutter.z), WithinRel(s->dist_rc, 1e-12));
    CHECK(std::abs(s->dist_ri - s->dist_ci) <= s->dist_rc * (1 + 1e-12));
    CHECK(s->dist_rc <= (s->dist_ri + s->dist_ci) * (1 + 1e-12));
    CHECK_NOTHROW(s->validate());
  }

  const auto same = scenario_for_delta(base, compute_delta_diff(base));
  REQUIRE(same.has_value());
  CHECK_THAT(same->dist_ci, WithinRel(base.dist_ci, 1e-12));
  CHECK_THAT(same->angle_ci.elevation, WithinAbs(base.angle_ci.elevation, 1e-12));
  CHECK_FALSE(scenario_for_delta(base, 120.0).has_value());
  CHECK_FALSE(scenario_for_delta(base, -1.0).has_value());
}

TEST_CASE("radar-side deltas flip the clutter azimuth", "[experiments]") {
  const auto near_side = scenario_for_delta(Scenario::standard(), 10.0);
  REQUIRE(near_side.has_value());
  CHECK_THAT(near_side->angle_ci.azimuth, WithinAbs(kPi, 1e-15));
  CHECK_THAT(rad_to_deg(near_side->angle_ci.elevation), WithinAbs(40.0, 1e-9));
  const auto far_side = scenario_for_delta(Scenario::standard(), 50.0);
  REQUIRE(far_side.has_value());
  CHECK(far_side->angle_ci.azimuth == 0.0);
  CHECK_THAT(rad_to_deg(far_side->angle_ci.elevation), WithinAbs(20.0, 1e-9));
}

TEST_CASE("sweep grids", "[experiments]") {
  CHECK(default_gamma_grid() == std::vector<double>{1e-8, 3e-8, 1e-7, 3e-7, 1e-6});
  const auto deltas = default_delta_grid();
  CHECK(deltas.size() == 17);
  CHECK(deltas.front() == 5.0);
  CHECK(deltas.back() == 85.0);
}

TEST_CASE("AoA scan table has one row per kind and angle", "[experiments]") {
  const Scenario s = reduced_scenario(Scenario::standard());
  ScanConfig cfg;
  cfg.epochs = 2;
  const std::vector<BaselineKind> kinds{BaselineKind::NoIrs, BaselineKind::RandomPhase,
                                        BaselineKind::OptimizedMm};
  const auto results = run_aoa_scan(s, kinds, 1, cfg);
  const CsvTable t = aoa_scan_table(results, s, cfg, 1);
  CHECK(count_data_rows(t) == kinds.size() * 721);
  CHECK(t.header == std::vector<std::string>{"kind", "angle_deg", "power_mw", "peak", "status"});
  CHECK(t.rows.front()[0] == "no_irs");
  CHECK(t.rows.front()[1] == "-90.0000");
  CHECK(t.rows.back()[0] == "optimized_mm");
  CHECK(t.rows.back()[1] == "90.0000");
}

TEST_CASE("infeasible solves are flagged, not fatal", "[experiments]") {
  Scenario s = reduced_scenario(Scenario::standard());
  s.threshold = 0.0;
  ScanConfig cfg;
  cfg.epochs = 1;
  const std::vector<BaselineKind> kinds{BaselineKind::OptimizedMm, BaselineKind::NoIrs};
  const auto results = run_aoa_scan(s, kinds, 1, cfg);
  REQUIRE(results.size() == 2);
  CHECK(results[0].status == "infeasible");
  CHECK(results[1].status == "ok");
  const CsvTable t = aoa_scan_table(results, s, cfg, 1);
  CHECK(t.rows.size() == 2 * 721);
  CHECK(t.rows.front()[2] == "nan");
}

TEST_CASE("gamma sweep rows respect their threshold", "[experiments]") {
  const Scenario s = reduced_scenario(Scenario::standard());
  const std::vector<double> gammas{1e-9, 1e-8, 1e-7};
  const std::vector<BaselineKind> kinds{BaselineKind::OptimizedMm, BaselineKind::RandomPhase};
  const auto rows = run_gamma_sweep(s, gammas, kinds, 3);
  REQUIRE(rows.size() == 6);
  for (const auto& r : rows) {
    CHECK(r.seed == 3);
    if (r.solver == BaselineKind::OptimizedMm && r.status == "ok") CHECK(r.p_target <= r.sweep_value * (1 + 1e-9));
    if (r.status == "above_threshold") CHECK(r.p_target > r.sweep_value);
  }
  CHECK(gamma_sweep_table(rows, s, 3).rows.size() == 6);
  const std::vector<double> bad{-1.0};
  CHECK_THROWS_AS(run_gamma_sweep(s, bad, kinds, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_gamma_sweep(s, std::vector<double>{}, kinds, 1), std::invalid_argument);
}

TEST_CASE("angle difference sweep flags unreachable points", "[experiments]") {
  const Scenario s = reduced_scenario(Scenario::standard());
  const std::vector<double> deltas{30.0, 125.0};
  const auto rows = run_angle_diff_sweep(s, deltas, 1);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].result.status == "ok");
  CHECK(rows[0].result.p_target <= s.threshold * (1 + 1e-9));
  CHECK(rows[1].result.status == "unreachable");
  const CsvTable t = angle_diff_table(rows, s, 1);
  CHECK(t.rows.size() == 2);
  bool has_layout = false;
  for (const auto& m : t.metadata) has_layout = has_layout || m.rfind("layout:", 0) == 0;
  CHECK(has_layout);
}

TEST_CASE("single solve table", "[experiments]") {
  const CsvTable t = run_solve(reduced_scenario(Scenario::standard()), 1);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.rows[0][0] == "optimized_mm");
  CHECK(t.rows[1][0] == "optimized_sdr");
}

TEST_CASE("experiments are reproducible in-process", "[experiments]") {
  const Scenario s = reduced_scenario(Scenario::standard());
  CHECK(run_solve(s, 9).to_string() == run_solve(s, 9).to_string());
  ScanConfig cfg;
  cfg.epochs = 3;
  const std::vector<BaselineKind> kinds{BaselineKind::RandomPhase};
  CHECK(aoa_scan_table(run_aoa_scan(s, kinds, 4, cfg), s, cfg, 4).to_string() ==
        aoa_scan_table(run_aoa_scan(s, kinds, 4, cfg), s, cfg, 4).to_string());
}
