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

#include "qmorse/carnot.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qmorse/errors.hpp"

namespace qmorse {

namespace {

constexpr double kParamTolerance = 1e-12;

bool close(double a, double b) {
  return std::abs(a - b) <= kParamTolerance * std::max({std::abs(a), std::abs(b), 1.0});
}

struct ReducedSide {
  double log_ratio;    // ln(erfi(u) / a)
  double gamma_ratio;  // gamma_2 e^{gamma_3} / erfc(gamma_1) reduced: 2u / erfi_scaled(u)
};

ReducedSide reduce(const MorseModel& model, const ThermalEnvironment& env) {
  const auto [a, u] = reduced_variables(model, env);
  const double scaled = specfun::erfi_scaled(u);
  return {u * u + std::log(scaled) - std::log(a), 2.0 * u / scaled};
}

}  // namespace

double reversibility_alpha(double alpha_b, double t_hot, double t_cold) {
  if (!(alpha_b > 0.0 && t_hot > 0.0 && t_cold > 0.0)) {
    throw DomainError("reversibility_alpha: arguments must be positive");
  }
  return alpha_b * std::sqrt(t_cold / t_hot);
}

CarnotSpec make_carnot_paper(const MorseParams& base, double alpha_hot, double alpha_cold,
                             double t_hot, double t_cold, double k_boltzmann) {
  MorseParams hot = base;
  hot.alpha = alpha_hot;
  MorseParams cold = base;
  cold.alpha = alpha_cold;
  CarnotSpec spec{ThermalEnvironment(t_hot, k_boltzmann), ThermalEnvironment(t_cold, k_boltzmann),
                  MorseModel(hot), MorseModel(cold), CarnotMode::kPaper};
  validate(spec);
  return spec;
}

CarnotSpec make_carnot_strict(const MorseParams& base, double alpha_hot, double t_hot,
                              double t_cold, double k_boltzmann) {
  MorseParams hot = base;
  hot.alpha = alpha_hot;
  MorseParams cold = base;
  cold.alpha = reversibility_alpha(alpha_hot, t_hot, t_cold);
  cold.dissociation_energy = base.dissociation_energy * t_cold / t_hot;
  CarnotSpec spec{ThermalEnvironment(t_hot, k_boltzmann), ThermalEnvironment(t_cold, k_boltzmann),
                  MorseModel(hot), MorseModel(cold), CarnotMode::kStrict};
  validate(spec);
  return spec;
}

void validate(const CarnotSpec& spec) {
  if (spec.hot.temperature() < spec.cold.temperature()) {
    throw DomainError("CarnotSpec: T_h must not be below T_c");
  }
  if (spec.hot.k_boltzmann() != spec.cold.k_boltzmann()) {
    throw DomainError("CarnotSpec: hot and cold baths use different k_B");
  }
  const MorseParams& h = spec.model_hot.params();
  const MorseParams& c = spec.model_cold.params();
  if (h.q != c.q || h.r_e != c.r_e || h.mu != c.mu || h.hbar != c.hbar) {
    throw DomainError("CarnotSpec: hot and cold models must share q, r_e, mu, hbar");
  }
  const double ratio = spec.cold.temperature() / spec.hot.temperature();
  if (spec.mode == CarnotMode::kPaper) {
    if (h.dissociation_energy != c.dissociation_energy) {
      throw DomainError("CarnotSpec(paper): D_e must be equal on both adiabats");
    }
  } else {
    if (!close(c.dissociation_energy, h.dissociation_energy * ratio)) {
      throw DomainError("CarnotSpec(strict): D_e,cold must equal D_e,hot T_c/T_h");
    }
    if (!close(spec.model_cold.lambda(), spec.model_hot.lambda())) {
      throw DomainError("CarnotSpec(strict): lambda must be invariant across the adiabats");
    }
  }
}

ReversibilityReport verify_reversibility(const MorseModel& model_b, const MorseModel& model_c,
                                         double ratio, double tol) {
  if (model_b.q() != model_c.q()) {
    throw DomainError("verify_reversibility: models must share q");
  }
  const BoundSpectrum b = bound_spectrum(model_b);
  const BoundSpectrum c = bound_spectrum(model_c);
  const std::size_t common = std::min(b.levels.size(), c.levels.size());
  if (common < 2) {
    throw DomainError("verify_reversibility: fewer than two common bound levels, no gap to compare");
  }
  ReversibilityReport report;
  for (std::size_t n = 0; n < common; ++n) {
    for (std::size_t m = n + 1; m < common; ++m) {
      const double expected = ratio * (b.levels[n] - b.levels[m]);
      const double actual = c.levels[n] - c.levels[m];
      report.max_relative_deviation =
          std::max(report.max_relative_deviation, std::abs(actual - expected) / std::abs(expected));
      ++report.pairs_checked;
    }
  }
  report.passed = report.max_relative_deviation <= tol;
  return report;
}

CycleResult carnot_cycle_sum(const CarnotSpec& spec) {
  validate(spec);
  const double s_b = thermal_state(spec.model_hot, spec.hot).entropy;
  const double s_d = thermal_state(spec.model_cold, spec.cold).entropy;
  const double k = spec.hot.k_boltzmann();
  const double delta_s = s_b - s_d;

  CycleResult r;
  r.q_hot = spec.hot.temperature() * k * delta_s;
  r.q_cold = -spec.cold.temperature() * k * delta_s;
  r.work = (spec.hot.temperature() - spec.cold.temperature()) * k * delta_s;
  finalize(r);
  return r;
}

double carnot_work_closed(const CarnotSpec& spec) {
  validate(spec);
  const ReducedSide h = reduce(spec.model_hot, spec.hot);
  const ReducedSide c = reduce(spec.model_cold, spec.cold);
  const double k = spec.hot.k_boltzmann();
  const double two_sqrt_pi = 2.0 * specfun::kSqrtPi;
  return k * (spec.cold.temperature() - spec.hot.temperature()) *
         ((c.log_ratio - h.log_ratio) + h.gamma_ratio / two_sqrt_pi - c.gamma_ratio / two_sqrt_pi);
}

specfun::ComplexValue carnot_work_formal(const CarnotSpec& spec) {
  using C = specfun::ComplexValue;
  validate(spec);
  struct Side {
    C root, gamma1, gamma2, erfc1;
    double gamma3;
  };
  auto side = [](const MorseModel& m, const ThermalEnvironment& env) {
    Side s;
    const double lq = m.lambda() * m.q();
    s.root = std::sqrt(C(env.beta() * m.energy_scale() * -1.0, 0.0));
    s.gamma1 = 0.5 * (1.0 - 2.0 * lq) * s.root;
    s.gamma2 = (2.0 * lq - 1.0) * s.root;
    s.gamma3 = 0.25 * env.beta() * m.energy_scale() * (1.0 - 2.0 * lq) * (1.0 - 2.0 * lq);
    s.erfc1 = specfun::erfc_formal(s.gamma1);
    return s;
  };
  const Side h = side(spec.model_hot, spec.hot);
  const Side c = side(spec.model_cold, spec.cold);
  const double sqrt_pi = specfun::kSqrtPi;
  const C bracket =
      c.erfc1 * (2.0 * sqrt_pi * h.erfc1 * (std::log(c.erfc1 / c.root) - std::log(h.erfc1 / h.root)) +
                 h.gamma2 * std::exp(h.gamma3)) -
      c.gamma2 * std::exp(c.gamma3) * h.erfc1;
  return spec.hot.k_boltzmann() * (spec.cold.temperature() - spec.hot.temperature()) * bracket /
         (2.0 * sqrt_pi * c.erfc1 * h.erfc1);
}

CycleResult carnot_cycle_closed(const CarnotSpec& spec) {
  validate(spec);
  const double delta_s = entropy_closed(spec.model_hot, spec.hot) - entropy_closed(spec.model_cold, spec.cold);
  const double k = spec.hot.k_boltzmann();
  CycleResult r;
  r.q_hot = spec.hot.temperature() * k * delta_s;
  r.q_cold = -spec.cold.temperature() * k * delta_s;
  r.work = carnot_work_closed(spec);
  try {
    r.imag_residue = std::abs(carnot_work_formal(spec).imag());
  } catch (const RangeError&) {
    r.imag_residue = std::numeric_limits<double>::quiet_NaN();
  }
  finalize(r);
  return r;
}

double carnot_efficiency(const CarnotSpec& spec) {
  return 1.0 - spec.cold.temperature() / spec.hot.temperature();
}

}  // namespace qmorse
