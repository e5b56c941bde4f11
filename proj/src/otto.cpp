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

#include "qmorse/otto.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qmorse/errors.hpp"

namespace qmorse {

namespace {

using C = specfun::ComplexValue;

constexpr double kSqrtPi = specfun::kSqrtPi;

void validate(const OttoSpec& spec) {
  if (spec.hot.temperature() < spec.cold.temperature()) {
    throw DomainError("OttoSpec: T_h must not be below T_c");
  }
  if (spec.hot.k_boltzmann() != spec.cold.k_boltzmann()) {
    throw DomainError("OttoSpec: hot and cold baths use different k_B");
  }
}

MorseModel build(const MorseParams& params, const char* name, double value) {
  try {
    return MorseModel(params);
  } catch (const DomainError& e) {
    throw DomainError(std::string("otto_endpoints: ") + name + "=" + std::to_string(value) + ": " +
                      e.what());
  }
}

C principal_root(double beta, const MorseModel& m) {
  return std::sqrt(C(beta * m.energy_scale() * -1.0, 0.0));
}

double checked_erfi(double x, const char* name) {
  try {
    return specfun::erfi(x);
  } catch (const RangeError&) {
    throw RangeError(name, specfun::kErfiMaxArgument,
                     std::string("lambda_set: erfi argument ") + name + "=" + std::to_string(x) +
                         " out of range");
  }
}

C checked_erfc(C z, const char* name) {
  try {
    return specfun::erfc_formal(z);
  } catch (const RangeError&) {
    throw RangeError(name, specfun::kErfiMaxArgument,
                     std::string("lambda_set: erfc argument ") + name + " out of range");
  }
}

}  // namespace

OttoEndpoints otto_endpoints(const OttoSpec& spec) {
  validate(spec);
  MorseParams hot = spec.protocol.shared;
  MorseParams cold = spec.protocol.shared;
  return std::visit(
      [&](const auto& drive) -> OttoEndpoints {
        using T = std::decay_t<decltype(drive)>;
        if constexpr (std::is_same_v<T, ChangingWidth>) {
          hot.alpha = drive.alpha_hot;
          cold.alpha = drive.alpha_cold;
          return {build(hot, "alpha_h", drive.alpha_hot), build(cold, "alpha_c", drive.alpha_cold)};
        } else if constexpr (std::is_same_v<T, ChangingDeformation>) {
          hot.q = drive.q_hot;
          cold.q = drive.q_cold;
          return {build(hot, "q_h", drive.q_hot), build(cold, "q_c", drive.q_cold)};
        } else {
          hot.dissociation_energy = drive.d_hot;
          cold.dissociation_energy = drive.d_cold;
          return {build(hot, "D_h", drive.d_hot), build(cold, "D_c", drive.d_cold)};
        }
      },
      spec.protocol.drive);
}

CycleResult otto_cycle_sum(const OttoSpec& spec) {
  const OttoEndpoints ends = otto_endpoints(spec);
  const BoundSpectrum hot = bound_spectrum(ends.model_hot);
  const BoundSpectrum cold = bound_spectrum(ends.model_cold);
  const std::size_t common = std::min(hot.levels.size(), cold.levels.size());

  // Boltzmann weights on the common range; the full sums give the dropped mass.
  auto weights = [common](const BoundSpectrum& s, double beta, double& dropped) {
    std::vector<double> w(common);
    double kept = 0.0;
    double total = 0.0;
    const double e0 = s.levels.front();
    for (std::size_t n = 0; n < s.levels.size(); ++n) {
      const double x = std::exp(-beta * (s.levels[n] - e0));
      total += x;
      if (n < common) {
        w[n] = x;
        kept += x;
      }
    }
    for (double& x : w) x /= kept;
    dropped = 1.0 - kept / total;
    return w;
  };
  double dropped_b = 0.0;
  double dropped_d = 0.0;
  const std::vector<double> p_b = weights(hot, spec.hot.beta(), dropped_b);
  const std::vector<double> p_d = weights(cold, spec.cold.beta(), dropped_d);

  CycleResult r;
  for (std::size_t n = 0; n < common; ++n) {
    const double dp = p_b[n] - p_d[n];
    r.q_hot += hot.levels[n] * dp;
    r.q_cold -= cold.levels[n] * dp;
    r.work += (hot.levels[n] - cold.levels[n]) * dp;
  }
  r.truncated_mass = std::max(dropped_b, dropped_d);
  finalize(r);
  return r;
}

namespace {

// Real parameters shared by the printed set and the scaled evaluation.
struct Core {
  double beta_h, beta_c, p, xh2, xc2, kh, kc;
  C root_h, root_c, gamma1_h, gamma1_c;
  double lambda1_h, lambda1_c, lambda2_ch, lambda2_hc_star, lambda3_ch, lambda4_ch, lambda5_ch;
  double lambda6_ch, lambda7_ch, lambda8_ch, lambda9_h, lambda9_c;
  double sqrt_bh_xh_sqrt_p, sqrt_bc_xc_sqrt_p;
};

Core core(const OttoSpec& spec) {
  const OttoEndpoints ends = otto_endpoints(spec);
  const MorseModel& mh = ends.model_hot;
  const MorseModel& mc = ends.model_cold;
  Core c;
  c.beta_h = spec.hot.beta();
  c.beta_c = spec.cold.beta();
  c.p = mh.p();
  c.xh2 = mh.xi() * mh.xi();
  c.xc2 = mc.xi() * mc.xi();
  // q lambda_s enters only as kappa_s = q_s lambda_s
  c.kh = mh.lambda() * mh.q();
  c.kc = mc.lambda() * mc.q();
  const double dk2 = (c.kc - c.kh) * (c.kc - c.kh);
  const double beta_h = c.beta_h, beta_c = c.beta_c, p = c.p, xh2 = c.xh2, xc2 = c.xc2, kh = c.kh, kc = c.kc;

  c.root_h = principal_root(beta_h, mh);
  c.root_c = principal_root(beta_c, mc);
  c.gamma1_h = 0.5 * (1.0 - 2.0 * kh) * c.root_h;
  c.gamma1_c = 0.5 * (1.0 - 2.0 * kc) * c.root_c;
  c.lambda1_c = 0.25 * beta_c * xc2 * p * (1.0 - 2.0 * kc) * (1.0 - 2.0 * kc);
  c.lambda1_h = 0.25 * beta_h * xh2 * p * (1.0 - 2.0 * kh) * (1.0 - 2.0 * kh);
  c.lambda2_ch = xh2 * p * (2.0 * (kc - 2.0 * kh) + 1.0);
  c.lambda2_hc_star = xc2 * p * (2.0 * (kh - 2.0 * kc) + 1.0);
  c.lambda3_ch = 2.0 * beta_h * xh2 * p * dk2 + 1.0;
  c.lambda4_ch = xc2 * (2.0 * p * dk2 - 1.0 / (beta_h * xh2));
  c.lambda5_ch = 2.0 * beta_c * xc2 * p * dk2 - 1.0;
  c.lambda6_ch = xh2 * (2.0 * kc - 4.0 * kh + 1.0) + xc2 * (2.0 * kc - 1.0);
  c.lambda7_ch = xc2 * (-4.0 * kc + 2.0 * kh + 1.0) + xh2 * (2.0 * kh - 1.0);
  c.lambda8_ch = xh2 * (beta_c + beta_h + 2.0 * beta_c * beta_h * xc2 * p * dk2) - beta_c * xc2;
  c.sqrt_bh_xh_sqrt_p = std::sqrt(beta_h) * mh.xi() * std::sqrt(p);
  c.sqrt_bc_xc_sqrt_p = std::sqrt(beta_c) * mc.xi() * std::sqrt(p);
  c.lambda9_h = 0.5 * c.sqrt_bh_xh_sqrt_p * (1.0 - 2.0 * kh);
  c.lambda9_c = 0.5 * c.sqrt_bc_xc_sqrt_p * (1.0 - 2.0 * kc);
  return c;
}

// e^{-x^2} erfi(x) for either sign.
double erfi_scaled_signed(double x) {
  return x < 0.0 ? -specfun::erfi_scaled(-x) : specfun::erfi_scaled(x);
}

// The closed forms multiply and divide by e^{Lambda_1} (through erfc(gamma_1)
// and erfi(Lambda_9), with gamma_1 = i Lambda_9 and Lambda_9^2 = Lambda_1).
// Carrying every such factor as e^{-Lambda_1} x (.) keeps the arithmetic
// finite and stops the separately rounded exponentials from disagreeing.
struct Scaled {
  Core c;
  C erfc_h, erfc_c;  // e^{-Lambda_1} erfc(gamma_1)
  C lambda10, lambda11, r0, r1;
};

Scaled scaled(const OttoSpec& spec) {
  Scaled s{core(spec), {}, {}, {}, {}, {}, {}};
  const Core& c = s.c;
  auto erfc_scaled = [](const C& gamma, double lambda1) {
    // erfc(iy) = 1 - i erfi(y)
    return C(std::exp(-lambda1), -erfi_scaled_signed(gamma.imag()));
  };
  s.erfc_h = erfc_scaled(c.gamma1_h, c.lambda1_h);
  s.erfc_c = erfc_scaled(c.gamma1_c, c.lambda1_c);
  s.lambda10 = kSqrtPi * c.sqrt_bh_xh_sqrt_p * erfi_scaled_signed(c.lambda9_h) * c.lambda8_ch;
  s.lambda11 = kSqrtPi * c.lambda8_ch * std::exp(-c.lambda1_h) - c.beta_c * c.root_h * c.lambda7_ch;
  const C lambda12 = kSqrtPi * c.sqrt_bc_xc_sqrt_p * c.xh2 * erfi_scaled_signed(c.lambda9_c) * c.lambda5_ch;
  const C lambda13 = kSqrtPi * c.xh2 * c.root_c * c.lambda5_ch * std::exp(-c.lambda1_c) +
                     c.beta_c * c.xc2 * c.p * c.lambda6_ch;
  s.r0 = lambda12 + lambda13;
  s.r1 = c.root_c * c.root_c * c.root_c * s.erfc_c;
  return s;
}

C hot_heat(const Scaled& s) {
  const Core& c = s.c;
  const C first = (2.0 * c.gamma1_h / s.erfc_h + kSqrtPi * (-c.beta_h * c.xh2 / (c.beta_c * c.xc2) + c.lambda3_ch)) /
                  (2.0 * c.beta_h * kSqrtPi);
  // Lambda_2^c of the heat expression is read as Lambda_2^{ch}
  const C second = c.lambda2_ch / (2.0 * kSqrtPi * c.root_c * s.erfc_c);
  return first + second;
}

C cold_heat(const Scaled& s) {
  const Core& c = s.c;
  const C bracket = 2.0 * c.gamma1_c / (c.beta_c * s.erfc_c) + c.lambda2_hc_star / (c.root_h * s.erfc_h);
  return bracket / (2.0 * kSqrtPi) + 0.5 * (1.0 / c.beta_c + c.lambda4_ch);
}

C work(const Scaled& s) {
  const Core& c = s.c;
  const C first = (s.lambda10 + s.lambda11 * c.root_h) / (c.root_h * c.beta_c * c.beta_h * c.xh2 * s.erfc_h);
  return (first - c.p * s.r0 / s.r1) / (2.0 * kSqrtPi);
}

}  // namespace

LambdaSet lambda_set(const OttoSpec& spec) {
  const Core c = core(spec);
  LambdaSet s;
  s.root_h = c.root_h;
  s.root_c = c.root_c;
  s.gamma1_h = c.gamma1_h;
  s.gamma1_c = c.gamma1_c;
  s.erfc_h = checked_erfc(s.gamma1_h, "gamma1_h");
  s.erfc_c = checked_erfc(s.gamma1_c, "gamma1_c");
  s.tau_h = c.beta_h * s.erfc_h;
  s.tau_c = c.beta_c * s.erfc_c;
  s.lambda1_h = c.lambda1_h;
  s.lambda1_c = c.lambda1_c;
  s.lambda2_ch = c.lambda2_ch;
  s.lambda2_hc_star = c.lambda2_hc_star;
  s.lambda3_ch = c.lambda3_ch;
  s.lambda4_ch = c.lambda4_ch;
  s.lambda5_ch = c.lambda5_ch;
  s.lambda6_ch = c.lambda6_ch;
  s.lambda7_ch = c.lambda7_ch;
  s.lambda8_ch = c.lambda8_ch;
  s.lambda9_h = c.lambda9_h;
  s.lambda9_c = c.lambda9_c;

  const double erfi_h = checked_erfi(s.lambda9_h, "lambda9_h");
  const double erfi_c = checked_erfi(s.lambda9_c, "lambda9_c");
  const double exp1_h = std::exp(s.lambda1_h);
  const double exp1_c = std::exp(s.lambda1_c);

  s.lambda10 = kSqrtPi * c.sqrt_bh_xh_sqrt_p * erfi_h * s.lambda8_ch;
  s.lambda11 = kSqrtPi * s.lambda8_ch - c.beta_c * s.root_h * exp1_h * s.lambda7_ch;
  s.lambda12 = kSqrtPi * c.sqrt_bc_xc_sqrt_p * c.xh2 * erfi_c * s.lambda5_ch;
  s.lambda13 = kSqrtPi * c.xh2 * s.root_c * s.lambda5_ch + c.beta_c * c.xc2 * c.p * exp1_c * s.lambda6_ch;
  s.ratio10 = s.lambda10 / s.root_h;
  s.r0 = s.lambda12 + s.lambda13;
  s.r1 = s.root_c * s.root_c * s.root_c * s.erfc_c;
  return s;
}

specfun::ComplexValue otto_hot_heat_closed(const OttoSpec& spec) { return hot_heat(scaled(spec)); }

specfun::ComplexValue otto_cold_heat_closed(const OttoSpec& spec) { return cold_heat(scaled(spec)); }

specfun::ComplexValue otto_work_closed(const OttoSpec& spec) { return work(scaled(spec)); }

OttoEfficiencyClosed otto_efficiency_closed(const OttoSpec& spec) {
  const Scaled s = scaled(spec);
  const Core& c = s.c;
  OttoEfficiencyClosed out;
  const C q_hot = hot_heat(s);
  if (!(q_hot.real() > 0.0)) return out;

  // single-fraction form: numerator and denominator are 2 sqrt(pi) W and 2 sqrt(pi) Q_h
  const C numerator =
      (s.lambda10 / c.root_h + s.lambda11) / (c.beta_c * c.xh2 * c.beta_h * s.erfc_h) - c.p * s.r0 / s.r1;
  const C denominator = 2.0 * c.gamma1_h / (c.beta_h * s.erfc_h) +
                        kSqrtPi * (-c.xh2 / (c.beta_c * c.xc2) + c.lambda3_ch / c.beta_h) +
                        c.lambda2_ch / (c.root_c * s.erfc_c);
  if (denominator.real() > 0.0) out.explicit_form = (numerator / denominator).real();
  out.ratio = work(s).real() / q_hot.real();
  return out;
}

CycleResult otto_cycle_closed(const OttoSpec& spec) {
  const Scaled s = scaled(spec);
  const C q_hot = hot_heat(s);
  const C q_cold = cold_heat(s);
  const C w = work(s);
  CycleResult r;
  r.q_hot = q_hot.real();
  r.q_cold = q_cold.real();
  r.work = w.real();
  r.imag_residue = std::max({std::abs(q_hot.imag()), std::abs(q_cold.imag()), std::abs(w.imag())});
  finalize(r);
  return r;
}

double otto_closure_gap(const OttoSpec& spec) {
  const Scaled s = scaled(spec);
  return std::abs(hot_heat(s).real() + cold_heat(s).real() - work(s).real());
}

}  // namespace qmorse
