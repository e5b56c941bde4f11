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

#include <vector>

#include "qmorse/specfun.hpp"
#include "qmorse/spectrum.hpp"

namespace qmorse {

class ThermalEnvironment {
public:
  /// Throws DomainError unless T and k_B are finite and positive.
  explicit ThermalEnvironment(double temperature, double k_boltzmann = 1.0);

  double temperature() const noexcept { return temperature_; }
  double k_boltzmann() const noexcept { return k_boltzmann_; }
  double beta() const noexcept { return 1.0 / (k_boltzmann_ * temperature_); }

private:
  double temperature_;
  double k_boltzmann_;
};

/// Canonical state over the bound levels. S is in units of k_B.
struct ThermalState {
  double beta = 0.0;
  double partition = 0.0;      // Z
  double log_partition = 0.0;  // ln Z
  std::vector<double> occupations;
  double internal_energy = 0.0;
  double entropy = 0.0;
};

/// a = sqrt(beta xi^2 p), u = (lambda q - 1/2) a. Real-domain reduction of
/// the formal argument sqrt(beta xi^2 (-p)) = i a.
struct ReducedVariables {
  double a;
  double u;
};

ReducedVariables reduced_variables(const MorseModel& model, const ThermalEnvironment& env);

/// Sum over bound levels with e^{-beta E_0} factored out.
/// Throws RangeError when Z itself is not representable.
double partition_sum(const MorseModel& model, const ThermalEnvironment& env);
double log_partition_sum(const MorseModel& model, const ThermalEnvironment& env);

/// Boltzmann state over the bound spectrum; the sum oracle is authoritative.
ThermalState thermal_state(const MorseModel& model, const ThermalEnvironment& env);

/// Continuum approximation sqrt(pi) erfi(u) / (2a), i.e. the level sum
/// replaced by the integral over n in [0, lambda q - 1/2].
double partition_closed(const MorseModel& model, const ThermalEnvironment& env);
double log_partition_closed(const MorseModel& model, const ThermalEnvironment& env);

/// The printed formal expression sqrt(pi) erfc(gamma_1) / (2 sqrt(beta xi^2 (-p)))
/// evaluated with principal square roots. Its real part equals
/// partition_closed; the imaginary part is -sqrt(pi)/(2a).
specfun::ComplexValue partition_formal(const MorseModel& model, const ThermalEnvironment& env);

/// -d ln Z_closed / d beta = (1/2 - u / (sqrt(pi) erfi_scaled(u))) / beta.
double internal_energy_closed(const MorseModel& model, const ThermalEnvironment& env);

/// S/k_B = ln Z_closed + 1/2 - u e^{u^2} / (sqrt(pi) erfi(u)).
double entropy_closed(const MorseModel& model, const ThermalEnvironment& env);

}  // namespace qmorse
