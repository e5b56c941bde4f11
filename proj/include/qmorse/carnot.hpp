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

#include "qmorse/cycle.hpp"
#include "qmorse/specfun.hpp"
#include "qmorse/spectrum.hpp"
#include "qmorse/thermo.hpp"

namespace qmorse {

// paper: D_e held fixed across the adiabats, only alpha changes.
// strict: D_e co-scaled by T_c/T_h so lambda is invariant and the gap-ratio
// condition holds exactly.
enum class CarnotMode { kPaper, kStrict };

struct CarnotSpec {
  ThermalEnvironment hot;
  ThermalEnvironment cold;
  MorseModel model_hot;   // point B
  MorseModel model_cold;  // point D
  CarnotMode mode = CarnotMode::kPaper;
};

/// alpha_C = alpha_B sqrt(T_c / T_h).
double reversibility_alpha(double alpha_b, double t_hot, double t_cold);

CarnotSpec make_carnot_paper(const MorseParams& base, double alpha_hot, double alpha_cold,
                             double t_hot, double t_cold, double k_boltzmann = 1.0);

/// alpha_c from reversibility_alpha, D_e,c = D_e,h T_c / T_h.
CarnotSpec make_carnot_strict(const MorseParams& base, double alpha_hot, double t_hot,
                              double t_cold, double k_boltzmann = 1.0);

/// Throws DomainError on T_h < T_c, mismatched k_B, or a mode invariant broken.
void validate(const CarnotSpec& spec);

struct ReversibilityReport {
  double max_relative_deviation = 0.0;
  int pairs_checked = 0;
  bool passed = false;
};

/// Checks E_n(C) - E_m(C) = ratio (E_n(B) - E_m(B)) over every pair of common
/// bound levels. Throws DomainError when fewer than two levels are shared.
ReversibilityReport verify_reversibility(const MorseModel& model_b, const MorseModel& model_c,
                                         double ratio, double tol);

/// Heats from the sum-oracle entropies S(B) and S(D).
CycleResult carnot_cycle_sum(const CarnotSpec& spec);

/// Work from the continuum entropies, arranged as the closed erfc/erfi
/// expression and reduced to real quantities.
double carnot_work_closed(const CarnotSpec& spec);

/// The same expression evaluated literally in complex arithmetic with
/// principal roots and logs. Its imaginary part is reported as a residue.
specfun::ComplexValue carnot_work_formal(const CarnotSpec& spec);

/// Q_h, Q_c and W from the continuum entropies, with the formal residue.
CycleResult carnot_cycle_closed(const CarnotSpec& spec);

/// 1 - T_c / T_h.
double carnot_efficiency(const CarnotSpec& spec);

}  // namespace qmorse
