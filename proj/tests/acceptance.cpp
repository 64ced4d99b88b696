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

// Acceptance runner: one PASS/FAIL line per criterion on the default
// scenario. Criterion 10 drives the real CLI binary.

#include "spooflab/validation.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace spooflab;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 1;

const char* const kNames[] = {"",
                              "expectation identity",
                              "MM ascent and feasibility",
                              "bound sandwich",
                              "solver parity",
                              "trade-off monotonicity",
                              "spoofing scan",
                              "angle-difference shape",
                              "lambda_max reduction",
                              "ADMM certificate",
                              "CLI determinism"};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string quote(const std::string& s) { return "'" + s + "'"; }

CheckResult cli_determinism(const std::string& cli) {
  CheckResult r;
  r.id = 10;
  r.name = kNames[10];
  const auto start = std::chrono::steady_clock::now();

  const fs::path dir = fs::temp_directory_path() / ("spooflab_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path config = dir / "small.cfg";
  std::ofstream(config) << "# reduced arrays keep repeated runs short\n"
                           "radar_nx = 4\nradar_ny = 4\nirs_nx = 4\nirs_ny = 4\n";

  const std::vector<std::pair<std::string, std::string>> verbs{
      {"scan-aoa", "--epochs 20"},
      {"sweep-gamma", ""},
      {"sweep-delta", ""},
      {"solve", ""},
      {"validate", "--only 8,2"},
  };
  bool ok = true;
  std::ostringstream d;
  for (const auto& [verb, extra] : verbs) {
    std::string outputs[2];
    int codes[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (verb + "_" + std::to_string(run) + ".csv");
      const std::string cmd = quote(cli) + " --config " + quote(config.string()) + " --seed 7 --out " +
                              quote(out.string()) + " " + verb + " " + extra + " 2>/dev/null";
      codes[run] = std::system(cmd.c_str());
      outputs[run] = slurp(out);
    }
    const bool same = codes[0] == 0 && codes[1] == 0 && !outputs[0].empty() && outputs[0] == outputs[1];
    ok = ok && same;
    d << verb << (same ? " identical" : " DIFFERS") << " (" << outputs[0].size() << " bytes); ";
  }
  fs::remove_all(dir);
  r.passed = ok;
  r.detail = d.str() + "4x4 arrays, seed 7";
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spooflab acceptance criteria"};
  std::vector<int> criteria;
  std::string cli;
  app.add_option("--criterion", criteria, "criterion ids (1-10); all when omitted")
      ->check(CLI::Range(1, kCheckCount))
      ->delimiter(',');
  app.add_option("--cli", cli, "path to the spooflab binary (needed for criterion 10)");
  CLI11_PARSE(app, argc, argv);

  if (criteria.empty())
    for (int i = 1; i <= kCheckCount; ++i) criteria.push_back(i);

  std::vector<int> in_process;
  bool want_cli = false;
  for (int id : criteria) {
    if (id == 10)
      want_cli = true;
    else
      in_process.push_back(id);
  }

  std::vector<CheckResult> results;
  if (!in_process.empty()) results = run_validation(Scenario::standard(), kSeed, in_process);
  if (want_cli) {
    if (cli.empty()) {
      std::cerr << "criterion 10 needs --cli\n";
      return 2;
    }
    results.push_back(cli_determinism(cli));
  }

  bool all = true;
  for (const auto& r : results) {
    std::cout << "criterion " << r.id << " " << kNames[r.id] << ": " << (r.passed ? "PASS" : "FAIL")
              << " (" << r.detail << "; " << std::fixed << std::setprecision(1) << r.elapsed_seconds
              << " s)" << std::endl;
    std::cout.unsetf(std::ios::fixed);
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
