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

#include "qmorse/spectrum.hpp"

#include <cmath>
#include <string>

#include "qmorse/errors.hpp"

namespace qmorse {

namespace {

// Offsets this close to an integer are treated as sitting on the threshold.
constexpr double kThresholdTolerance = 1e-12;
constexpr double kMaxExponent = 709.0;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string("MorseModel: ") + name + " must be positive and finite");
  }
}

}  // namespace

MorseModel::MorseModel(const MorseParams& params) : params_(params) {
  require_positive(params.dissociation_energy, "D_e");
  require_positive(params.alpha, "alpha");
  require_positive(params.r_e, "r_e");
  require_positive(params.mu, "mu");
  require_positive(params.hbar, "hbar");
  if (!(params.q > 0.0 && params.q <= 1.0)) {
    throw DomainError("MorseModel: q must lie in (0, 1]");
  }
  xi_ = params.alpha * params.r_e;
  p_ = params.hbar * params.hbar / (2.0 * params.mu * params.r_e * params.r_e);
  lambda_ = std::sqrt(params.dissociation_energy / (xi_ * xi_ * p_));
  if (!(level_offset() > kThresholdTolerance)) {
    throw DomainError("MorseModel: no bound level (lambda q = " + std::to_string(lambda_ * params.q) +
                      " <= 1/2)");
  }
}

MorseModel MorseModel::with_alpha(double alpha) const {
  MorseParams p = params_;
  p.alpha = alpha;
  return MorseModel(p);
}

MorseModel MorseModel::with_q(double q) const {
  MorseParams p = params_;
  p.q = q;
  return MorseModel(p);
}

MorseModel MorseModel::with_dissociation_energy(double d_e) const {
  MorseParams p = params_;
  p.dissociation_energy = d_e;
  return MorseModel(p);
}

double potential_value(const MorseModel& model, double x) {
  const double xi = model.xi();
  if (!std::isfinite(x)) throw DomainError("potential_value: non-finite x");
  if (-2.0 * xi * x > kMaxExponent) {
    throw RangeError("x", -kMaxExponent / (2.0 * xi),
                     "potential_value: e^{-2 xi x} overflows at x=" + std::to_string(x));
  }
  const double e1 = std::exp(-xi * x);
  return model.dissociation_energy() * (e1 * e1 - 2.0 * model.q() * e1);
}

PotentialMinimum potential_minimum(const MorseModel& model) {
  const double q = model.q();
  // dV/dx = 0 at e^{-xi x} = q
  return {-std::log(q) / model.xi(), -model.dissociation_energy() * q * q};
}

HarmonicExpansion harmonic_expansion(const MorseModel& model) {
  const double d = model.dissociation_energy();
  const double xi = model.xi();
  const double q = model.q();
  return {d * (1.0 - 2.0 * q), 2.0 * xi * d * (q - 1.0), xi * xi * d * (2.0 - q), 2.0 * xi * xi * d};
}

int n_max(const MorseModel& model) {
  const double c = model.level_offset();
  int n = static_cast<int>(std::ceil(c)) - 1;
  // c within rounding of an integer: that integer is the threshold level
  if (c - n <= kThresholdTolerance * std::max(1.0, c)) --n;
  if (n < 0) n = 0;
  return n;
}

double eigenvalue(const MorseModel& model, int n) {
  const int top = n_max(model);
  if (n < 0 || n > top) throw LevelError(n, top);
  const double d = model.level_offset() - n;
  return -model.energy_scale() * d * d;
}

BoundSpectrum bound_spectrum(const MorseModel& model) {
  BoundSpectrum spectrum;
  const int top = n_max(model);
  spectrum.levels.reserve(static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= top; ++n) {
    const double d = model.level_offset() - n;
    spectrum.levels.push_back(-model.energy_scale() * d * d);
  }
  return spectrum;
}

}  // namespace qmorse
