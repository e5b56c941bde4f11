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

#include <optional>
#include <string_view>

namespace qmorse {

enum class Regime { kEngine, kRefrigerator, kHeater, kAccelerator, kDegenerate, kUnclassified };

std::string_view regime_name(Regime regime);

/// One evaluated cycle. Signs follow the working medium: Q_h > 0 is heat
/// taken from the hot bath, W > 0 is work delivered.
struct CycleResult {
  double q_hot = 0.0;
  double q_cold = 0.0;
  double work = 0.0;
  std::optional<double> efficiency;  // W / Q_h, only when Q_h > 0
  Regime regime = Regime::kDegenerate;

  // Diagnostics. imag_residue: largest |Im| discarded from a formal complex
  // evaluation. truncated_mass: probability dropped when two spectra were cut
  // to their common level range.
  double imag_residue = 0.0;
  double truncated_mass = 0.0;
};

/// Sign-based classification. |W| at or below `zero_tolerance` times the heat
/// scale counts as degenerate.
Regime classify(double q_hot, double q_cold, double work, double zero_tolerance = 1e-12);

/// Fills efficiency and regime from q_hot, q_cold and work.
void finalize(CycleResult& result);

}  // namespace qmorse
