// Copyright 2026 The qmorse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmorse {

enum class VerifyLevel { kSpecfun, kSpectrum, kThermo, kCycles, kAll };

VerifyLevel parse_verify_level(const std::string& name);  // ConfigError on unknown names

/// A hard check fails the run; a soft check is informational (closed-form gaps,
/// formal residues, figure-grid sign fractions).
struct VerifyCheck {
  std::string level;
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool hard = true;
  bool passed = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool passed() const;
  /// Name of the first failing hard check, empty when everything passed.
  std::string first_failure() const;
};

VerifyReport run_verify(VerifyLevel level);

void print_report(std::ostream& out, const VerifyReport& report);

}  // namespace qmorse
