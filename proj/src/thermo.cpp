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

#include "qmorse/thermo.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qmorse/errors.hpp"

namespace qmorse {

namespace {

constexpr double kMaxLog = 709.0;

}  // namespace

ThermalEnvironment::ThermalEnvironment(double temperature, double k_boltzmann)
    : temperature_(temperature), k_boltzmann_(k_boltzmann) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw DomainError("ThermalEnvironment: temperature must be positive and finite");
  }
  if (!(k_boltzmann > 0.0) || !std::isfinite(k_boltzmann)) {
    throw DomainError("ThermalEnvironment: k_B must be positive and finite");
  }
}

ReducedVariables reduced_variables(const MorseModel& model, const ThermalEnvironment& env) {
  const double a = std::sqrt(env.beta() * model.energy_scale());
  return {a, model.level_offset() * a};
}

double log_partition_sum(const MorseModel& model, const ThermalEnvironment& env) {
  const BoundSpectrum spectrum = bound_spectrum(model);
  const double beta = env.beta();
  const double e0 = spectrum.levels.front();
  double reduced = 0.0;
  for (double e : spectrum.levels) reduced += std::exp(-beta * (e - e0));
  return -beta * e0 + std::log(reduced);
}

double partition_sum(const MorseModel& model, const ThermalEnvironment& env) {
  const double log_z = log_partition_sum(model, env);
  if (log_z > kMaxLog) {
    const double shift = -env.beta() * eigenvalue(model, 0);
    throw RangeError("beta|E_0|", kMaxLog,
                     "partition_sum: Z overflows (beta|E_0| = " + std::to_string(shift) + ")");
  }
  return std::exp(log_z);
}

ThermalState thermal_state(const MorseModel& model, const ThermalEnvironment& env) {
  const BoundSpectrum spectrum = bound_spectrum(model);
  ThermalState state;
  state.beta = env.beta();
  const double e0 = spectrum.levels.front();

  state.occupations.reserve(spectrum.levels.size());
  double reduced = 0.0;
  for (double e : spectrum.levels) {
    const double w = std::exp(-state.beta * (e - e0));
    state.occupations.push_back(w);
    reduced += w;
  }
  state.log_partition = -state.beta * e0 + std::log(reduced);
  state.partition = partition_sum(model, env);

  for (std::size_t n = 0; n < spectrum.levels.size(); ++n) {
    double& p = state.occupations[n];
    p /= reduced;
    state.internal_energy += p * spectrum.levels[n];
    if (p > 0.0) state.entropy -= p * std::log(p);
  }
  return state;
}

double partition_closed(const MorseModel& model, const ThermalEnvironment& env) {
  const auto [a, u] = reduced_variables(model, env);
  return specfun::kSqrtPi * specfun::erfi(u) / (2.0 * a);
}

double log_partition_closed(const MorseModel& model, const ThermalEnvironment& env) {
  const auto [a, u] = reduced_variables(model, env);
  return u * u + std::log(specfun::erfi_scaled(u)) + std::log(specfun::kSqrtPi / (2.0 * a));
}

specfun::ComplexValue partition_formal(const MorseModel& model, const ThermalEnvironment& env) {
  using C = specfun::ComplexValue;
  const C root = std::sqrt(C(env.beta() * model.energy_scale() * -1.0, 0.0));
  const C gamma1 = 0.5 * (1.0 - 2.0 * model.lambda() * model.q()) * root;
  return specfun::kSqrtPi * specfun::erfc_formal(gamma1) / (2.0 * root);
}

double internal_energy_closed(const MorseModel& model, const ThermalEnvironment& env) {
  const auto [a, u] = reduced_variables(model, env);
  return (0.5 - u / (specfun::kSqrtPi * specfun::erfi_scaled(u))) / env.beta();
}

double entropy_closed(const MorseModel& model, const ThermalEnvironment& env) {
  const auto [a, u] = reduced_variables(model, env);
  return log_partition_closed(model, env) + 0.5 -
         u / (specfun::kSqrtPi * specfun::erfi_scaled(u));
}

}  // namespace qmorse
