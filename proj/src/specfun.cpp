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

#include "qmorse/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qmorse/errors.hpp"

namespace qmorse::specfun {

namespace {

constexpr double kTwoOverSqrtPi = 2.0 / kSqrtPi;
constexpr double kSeriesCrossover = 6.0;
constexpr double kFormalSeriesRadius = 3.0;

void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(fn) + ": non-finite argument");
  }
}

// Maclaurin series of erfi: sum x^{2k+1} / (k! (2k+1)), all terms positive.
double erfi_series(double x) {
  const double x2 = x * x;
  double power = x;  // x^{2k+1} / k!
  double sum = x;
  for (int k = 1; k < 2000; ++k) {
    power *= x2 / k;
    const double term = power / (2 * k + 1);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return kTwoOverSqrtPi * sum;
}

// e^{-x^2} erfi(x) ~ 1/(x sqrt(pi)) sum_k (2k-1)!! / (2x^2)^k, x >= kSeriesCrossover.
double erfi_scaled_asymptotic(double x) {
  const double inv2x2 = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    const double next = term * (2 * k - 1) * inv2x2;
    if (next >= term) break;  // smallest term reached
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return sum / (x * kSqrtPi);
}

}  // namespace

double erf(double x) {
  require_finite(x, "erf");
  return std::erf(x);
}

double erfc(double x) {
  require_finite(x, "erfc");
  return std::erfc(x);
}

double erfi(double x) {
  require_finite(x, "erfi");
  const double ax = std::abs(x);
  if (ax > kErfiMaxArgument) {
    throw RangeError("x", kErfiMaxArgument,
                     "erfi: |x|=" + std::to_string(ax) + " exceeds overflow threshold " +
                         std::to_string(kErfiMaxArgument));
  }
  const double magnitude =
      ax <= kSeriesCrossover ? erfi_series(ax) : std::exp(ax * ax) * erfi_scaled_asymptotic(ax);
  return std::copysign(magnitude, x);
}

double erfi_scaled(double x) {
  require_finite(x, "erfi_scaled");
  if (x < 0.0) throw DomainError("erfi_scaled: negative argument");
  if (x <= kSeriesCrossover) return std::exp(-x * x) * erfi_series(x);
  return erfi_scaled_asymptotic(x);
}

ComplexValue erfc_formal(ComplexValue z) {
  require_finite(z.real(), "erfc_formal");
  require_finite(z.imag(), "erfc_formal");
  if (z.imag() == 0.0) return {erfc(z.real()), 0.0};
  if (z.real() == 0.0) {
    if (std::abs(z.imag()) > kErfiMaxArgument) {
      throw RangeError("Im z", kErfiMaxArgument,
                       "erfc_formal: |Im z| exceeds erfi range " + std::to_string(kErfiMaxArgument));
    }
    return {1.0, -erfi(z.imag())};
  }
  if (std::abs(z) > kFormalSeriesRadius) {
    throw DomainError("erfc_formal: off-axis argument with |z| > 3 is not supported");
  }
  // erf(z) = 2/sqrt(pi) sum (-1)^k z^{2k+1} / (k! (2k+1))
  const ComplexValue z2 = z * z;
  ComplexValue power = z;
  ComplexValue sum = z;
  for (int k = 1; k < 200; ++k) {
    power *= -z2 / static_cast<double>(k);
    const ComplexValue term = power / static_cast<double>(2 * k + 1);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return 1.0 - kTwoOverSqrtPi * sum;
}

}  // namespace qmorse::specfun
