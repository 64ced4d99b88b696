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

#ifndef SPOOFLAB_ERRORS_HPP
#define SPOOFLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spooflab {

// Bad arguments are reported with std::invalid_argument throughout the library.

/// No unit-modulus reflection vector satisfies the target-power constraint
/// (or none could be found by the restoration iteration).
class InfeasibleScenario : public std::runtime_error {
 public:
  explicit InfeasibleScenario(const std::string& what) : std::runtime_error(what) {}
};

/// The linearized constraint of one MM step cannot be met for any finite
/// multiplier in the search bracket.
class SurrogateInfeasible : public std::runtime_error {
 public:
  explicit SurrogateInfeasible(const std::string& what) : std::runtime_error(what) {}
};

/// Geometry outside the two supported in-plane azimuth patterns.
class UnsupportedLayout : public std::runtime_error {
 public:
  explicit UnsupportedLayout(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed scenario configuration. Carries the offending line when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace spooflab

#endif
