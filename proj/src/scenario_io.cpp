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

#include "spooflab/scenario_io.hpp"

#include "spooflab/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace spooflab {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& text, int line) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value))
    throw ParseError("'" + text + "' is not a finite number", line);
  return value;
}

int parse_count(const std::string& text, int line) {
  int value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) throw ParseError("'" + text + "' is not an integer", line);
  if (value < 1) throw ParseError("element counts must be positive", line);
  return value;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Scenario s = Scenario::standard();
  // Angles are kept in degrees until every line is read so that elevation
  // and azimuth can be given in any order.
  std::optional<double> ri_el, ri_az, rc_el, rc_az, ci_el, ci_az;
  double wavelength = s.wavelength();
  std::optional<double> radar_spacing, irs_spacing;
  std::map<std::string, int> key_line;

  auto positive = [](double v, const char* what, int line) {
    if (!(v > 0.0)) throw ParseError(std::string(what) + " must be positive", line);
    return v;
  };
  auto elevation = [](double v, int line) {
    if (v < -90.0 || v > 90.0) throw ParseError("elevation must lie in [-90, 90] deg", line);
    return v;
  };

  const std::map<std::string, std::function<void(double, const std::string&, int)>> handlers = {
      {"radar_nx", [&](double, const std::string& t, int l) { s.radar_geom.count_x = parse_count(t, l); }},
      {"radar_ny", [&](double, const std::string& t, int l) { s.radar_geom.count_y = parse_count(t, l); }},
      {"irs_nx", [&](double, const std::string& t, int l) { s.irs_geom.count_x = parse_count(t, l); }},
      {"irs_ny", [&](double, const std::string& t, int l) { s.irs_geom.count_y = parse_count(t, l); }},
      {"wavelength_m", [&](double v, const std::string&, int l) { wavelength = positive(v, "wavelength", l); }},
      {"radar_spacing_m", [&](double v, const std::string&, int l) { radar_spacing = positive(v, "spacing", l); }},
      {"irs_spacing_m", [&](double v, const std::string&, int l) { irs_spacing = positive(v, "spacing", l); }},
      {"ri_elevation_deg", [&](double v, const std::string&, int l) { ri_el = elevation(v, l); }},
      {"ri_azimuth_deg", [&](double v, const std::string&, int) { ri_az = v; }},
      {"rc_elevation_deg", [&](double v, const std::string&, int l) { rc_el = elevation(v, l); }},
      {"rc_azimuth_deg", [&](double v, const std::string&, int) { rc_az = v; }},
      {"ci_elevation_deg", [&](double v, const std::string&, int l) { ci_el = elevation(v, l); }},
      {"ci_azimuth_deg", [&](double v, const std::string&, int) { ci_az = v; }},
      {"dist_ri_m", [&](double v, const std::string&, int l) { s.dist_ri = positive(v, "distance", l); }},
      {"dist_rc_m", [&](double v, const std::string&, int l) { s.dist_rc = positive(v, "distance", l); }},
      {"dist_ci_m", [&](double v, const std::string&, int l) { s.dist_ci = positive(v, "distance", l); }},
      {"ref_gain_db", [&](double v, const std::string&, int) { s.ref_gain = db_to_linear(v); }},
      {"clutter_rcs_dbsm", [&](double v, const std::string&, int) { s.clutter_rcs = db_to_linear(v); }},
      {"target_rcs_dbsm", [&](double v, const std::string&, int) { s.target_rcs = db_to_linear(v); }},
      {"noise_power_mw",
       [&](double v, const std::string&, int l) {
         if (v < 0.0) throw ParseError("noise power must be non-negative", l);
         s.noise_power = v;
       }},
      {"threshold_mw",
       [&](double v, const std::string&, int l) {
         if (v < 0.0) throw ParseError("threshold must be non-negative", l);
         s.threshold = v;
       }},
  };
  static const std::set<std::string> kIntegerKeys = {"radar_nx", "radar_ny", "irs_nx", "irs_ny"};

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto handler = handlers.find(key);
    if (handler == handlers.end()) throw ParseError("unknown key '" + key + "'", line_no);
    if (value.empty()) throw ParseError("missing value for '" + key + "'", line_no);
    if (const auto [it, fresh] = key_line.emplace(key, line_no); !fresh)
      throw ParseError("duplicate key '" + key + "' (first on line " + std::to_string(it->second) + ")", line_no);
    const double number = kIntegerKeys.count(key) ? 0.0 : parse_number(value, line_no);
    handler->second(number, value, line_no);
  }

  s.radar_geom.wavelength = wavelength;
  s.irs_geom.wavelength = wavelength;
  s.radar_geom.spacing = radar_spacing.value_or(wavelength / 2.0);
  s.irs_geom.spacing = irs_spacing.value_or(wavelength / 2.0);
  auto merge = [](AnglePair& pair, const std::optional<double>& el, const std::optional<double>& az) {
    if (!el && !az) return;
    pair = AnglePair::from_degrees(el.value_or(rad_to_deg(pair.elevation)),
                                   az.value_or(rad_to_deg(pair.azimuth)));
  };
  merge(s.angle_ri, ri_el, ri_az);
  merge(s.angle_rc, rc_el, rc_az);
  merge(s.angle_ci, ci_el, ci_az);
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  if (path.empty()) return Scenario::standard();
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace spooflab
