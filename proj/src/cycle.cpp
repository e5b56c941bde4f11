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

#include "qmorse/cycle.hpp"

#include <algorithm>
#include <cmath>

namespace qmorse {

std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::kEngine: return "engine";
    case Regime::kRefrigerator: return "refrigerator";
    case Regime::kHeater: return "heater";
    case Regime::kAccelerator: return "accelerator";
    case Regime::kDegenerate: return "degenerate";
    case Regime::kUnclassified: return "unclassified";
  }
  return "unclassified";
}

Regime classify(double q_hot, double q_cold, double work, double zero_tolerance) {
  const double scale = std::max({std::abs(q_hot), std::abs(q_cold), 1.0});
  if (std::abs(work) <= zero_tolerance * scale) return Regime::kDegenerate;
  if (q_hot > 0.0 && q_cold < 0.0 && work > 0.0) return Regime::kEngine;
  if (q_hot < 0.0 && q_cold > 0.0 && work < 0.0) return Regime::kRefrigerator;
  if (q_hot < 0.0 && q_cold < 0.0 && work < 0.0) return Regime::kHeater;
  if (q_hot > 0.0 && q_cold < 0.0 && work < 0.0) return Regime::kAccelerator;
  return Regime::kUnclassified;
}

void finalize(CycleResult& result) {
  result.regime = classify(result.q_hot, result.q_cold, result.work);
  if (result.q_hot > 0.0 && result.regime != Regime::kDegenerate) {
    result.efficiency = result.work / result.q_hot;
  } else {
    result.efficiency.reset();
  }
}

}  // namespace qmorse
