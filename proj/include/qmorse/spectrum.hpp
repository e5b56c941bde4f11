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

namespace qmorse {

/// Physical parameters of the q-deformed Morse oscillator
///   V_q(x) = D_e (e^{-2 xi x} - 2 q e^{-xi x}),  x = (r - r_e) / r_e.
/// Defaults use hbar = mu = r_e = 1.
struct MorseParams {
  double dissociation_energy = 10.0;  // D_e
  double alpha = 2.0;                 // well width, inverse length
  double q = 1.0;                     // deformation, (0, 1]
  double r_e = 1.0;
  double mu = 1.0;
  double hbar = 1.0;
};

/// Validated, immutable model. Construction throws DomainError unless every
/// parameter is positive, 0 < q <= 1 and at least one level is bound
/// (lambda q > 1/2).
class MorseModel {
public:
  explicit MorseModel(const MorseParams& params);

  const MorseParams& params() const noexcept { return params_; }
  double dissociation_energy() const noexcept { return params_.dissociation_energy; }
  double alpha() const noexcept { return params_.alpha; }
  double q() const noexcept { return params_.q; }

  double xi() const noexcept { return xi_; }          // alpha r_e
  double p() const noexcept { return p_; }            // hbar^2 / (2 mu r_e^2)
  double lambda() const noexcept { return lambda_; }  // sqrt(D_e / (xi^2 p))

  /// lambda q - 1/2: the continuous "quantum number" where E reaches 0.
  double level_offset() const noexcept { return lambda_ * params_.q - 0.5; }

  /// xi^2 p, the energy unit of the spectrum.
  double energy_scale() const noexcept { return xi_ * xi_ * p_; }

  MorseModel with_alpha(double alpha) const;
  MorseModel with_q(double q) const;
  MorseModel with_dissociation_energy(double d_e) const;

private:
  MorseParams params_;
  double xi_;
  double p_;
  double lambda_;
};

struct PotentialMinimum {
  double x0;
  double v_min;
};

struct HarmonicExpansion {
  double c0;  // D_e (1 - 2q)
  double c1;  // 2 xi D_e (q - 1)
  double c2;  // xi^2 D_e (2 - q)
  double k_spring;  // 2 xi^2 D_e
};

/// Bound eigenvalues E_0 < ... < E_{n_max}, all strictly negative.
struct BoundSpectrum {
  std::vector<double> levels;
  int n_max() const noexcept { return static_cast<int>(levels.size()) - 1; }
};

/// Throws RangeError when e^{-2 xi x} overflows.
double potential_value(const MorseModel& model, double x);
PotentialMinimum potential_minimum(const MorseModel& model);
HarmonicExpansion harmonic_expansion(const MorseModel& model);

/// Highest n with lambda q - n - 1/2 > 0. A level landing exactly on the
/// dissociation threshold (E = 0) is not counted.
int n_max(const MorseModel& model);

/// E_n = -xi^2 p (lambda q - n - 1/2)^2. Throws LevelError for n > n_max.
double eigenvalue(const MorseModel& model, int n);

BoundSpectrum bound_spectrum(const MorseModel& model);

/// Eigenvalues of -p d^2/dx^2 + V_q(x) on a uniform grid over [x_min, x_max]
/// with Dirichlet walls, ascending. Independent check of the analytic levels.
/// Throws DomainError if the grid is too coarse, x0 lies outside the box, or
/// the ground state still has appreciable amplitude at a wall.
std::vector<double> fd_schrodinger_oracle(const MorseModel& model, double x_min, double x_max,
                                          int grid_points);

/// Relative amplitude |psi_0| at the box walls for the discretized ground
/// state (max over both walls, normalised to max |psi_0|).
double fd_boundary_amplitude(const MorseModel& model, double x_min, double x_max, int grid_points);

}  // namespace qmorse
