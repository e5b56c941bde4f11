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
#include <variant>

#include "qmorse/cycle.hpp"
#include "qmorse/specfun.hpp"
#include "qmorse/spectrum.hpp"
#include "qmorse/thermo.hpp"

namespace qmorse {

struct ChangingWidth {
  double alpha_hot;
  double alpha_cold;
};

struct ChangingDeformation {
  double q_hot;
  double q_cold;
};

struct ChangingDissociation {
  double d_hot;
  double d_cold;
};

/// Which parameter pair is driven between the two isochoric strokes. The
/// remaining parameters come from `shared`.
struct OttoProtocol {
  std::variant<ChangingWidth, ChangingDeformation, ChangingDissociation> drive;
  MorseParams shared;
};

struct OttoSpec {
  OttoProtocol protocol;
  ThermalEnvironment hot;
  ThermalEnvironment cold;
};

struct OttoEndpoints {
  MorseModel model_hot;   // E(A) = E(B)
  MorseModel model_cold;  // E(C) = E(D)
};

/// Throws DomainError naming the driven parameter when an endpoint has no
/// bound level.
OttoEndpoints otto_endpoints(const OttoSpec& spec);

/// Heats and work from the Boltzmann occupations of the two isochores. Both
/// distributions are cut to the common level range n <= min(n_max) and
/// renormalised; the dropped mass is reported in truncated_mass.
CycleResult otto_cycle_sum(const OttoSpec& spec);

/// Dimensionless parameters of the closed-form Otto expressions. Entries that
/// carry sqrt(beta xi^2 (-p)) are genuinely complex; the erfi arguments
/// lambda9_* are real. q lambda_s enters only through kappa_s = q_s lambda_s,
/// so the same set serves all three protocols.
struct LambdaSet {
  using C = specfun::ComplexValue;

  C root_h, root_c;  // sqrt(beta_s xi_s^2 (-p)), principal branch
  C gamma1_h, gamma1_c;
  C erfc_h, erfc_c;  // erfc(gamma1_s)
  C tau_h, tau_c;    // beta_s erfc(gamma1_s)
  double lambda1_h = 0, lambda1_c = 0;
  double lambda2_ch = 0, lambda2_hc_star = 0;
  double lambda3_ch = 0, lambda4_ch = 0, lambda5_ch = 0, lambda6_ch = 0;
  double lambda7_ch = 0, lambda8_ch = 0;
  double lambda9_h = 0, lambda9_c = 0;
  double lambda10 = 0;
  C lambda11, lambda12, lambda13;
  C ratio10;  // lambda10 / root_h
  C r0, r1;   // lambda12 + lambda13, root_c^3 erfc_c
};

/// Throws RangeError naming the parameter when an erfi argument leaves range.
LambdaSet lambda_set(const OttoSpec& spec);

/// Closed-form heats and work as formal complex values. Callers use the real
/// part; the imaginary part is the residue of the formal evaluation.
specfun::ComplexValue otto_hot_heat_closed(const OttoSpec& spec);
specfun::ComplexValue otto_cold_heat_closed(const OttoSpec& spec);
specfun::ComplexValue otto_work_closed(const OttoSpec& spec);

struct OttoEfficiencyClosed {
  std::optional<double> explicit_form;  // Re of the single-fraction expression
  std::optional<double> ratio;          // Re W / Re Q_h
};

/// Both entries are empty when Re Q_h <= 0.
OttoEfficiencyClosed otto_efficiency_closed(const OttoSpec& spec);

/// Closed-form CycleResult from the real parts. imag_residue is the largest
/// |Im| of Q_h, Q_c, W.
CycleResult otto_cycle_closed(const OttoSpec& spec);

/// |Re(Q_h + Q_c) - Re W| for the closed forms.
double otto_closure_gap(const OttoSpec& spec);

}  // namespace qmorse
