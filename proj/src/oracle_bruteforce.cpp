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

#include "spooflab/oracle_bruteforce.hpp"

#include "spooflab/errors.hpp"

#include <stdexcept>
#include <vector>

namespace spooflab {

BruteForceResult enumerate_best(const QuadraticForms& forms, double gamma, int levels,
                                bool pin_first) {
  const int n = forms.size();
  if (levels < 1) throw std::invalid_argument("enumerate_best: levels must be positive");
  if (n < 1) throw std::invalid_argument("enumerate_best: empty forms");

  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(levels);
    if (total > kBruteForceBudget)
      throw std::invalid_argument("enumerate_best: levels^N exceeds the evaluation budget");
  }

  std::vector<Complex> alphabet(static_cast<std::size_t>(levels));
  for (int k = 0; k < levels; ++k) alphabet[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * kPi * k / levels);

  const int first_free = pin_first ? 1 : 0;
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  CVector theta = CVector::Ones(n);

  BruteForceResult res;
  res.total_count = total;
  res.objective = -1.0;
  CVector best;
  const std::uint64_t multiplicity = pin_first ? static_cast<std::uint64_t>(levels) : 1;

  while (true) {
    ++res.evaluated_count;
    const double con = forms.constraint.quad(theta);
    if (con <= gamma) {
      res.feasible_count += multiplicity;
      const double obj = forms.objective.quad(theta);
      if (obj > res.objective) {
        res.objective = obj;
        res.constraint = con;
        best = theta;
      }
    }
    // Odometer over the free digits, last index fastest.
    int pos = n - 1;
    while (pos >= first_free) {
      auto& dg = digit[static_cast<std::size_t>(pos)];
      if (++dg < levels) {
        theta(pos) = alphabet[static_cast<std::size_t>(dg)];
        break;
      }
      dg = 0;
      theta(pos) = alphabet[0];
      --pos;
    }
    if (pos < first_free) break;
  }

  if (best.size() == 0) throw InfeasibleScenario("no enumerated phase vector meets the threshold");
  res.theta = ReflectionVector::reflect(std::move(best));
  return res;
}

}  // namespace spooflab
