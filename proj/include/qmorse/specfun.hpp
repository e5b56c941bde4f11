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

#include <complex>
#include <numbers>

namespace qmorse::specfun {

using ComplexValue = std::complex<double>;

// Largest |x| for which e^{x^2} (and therefore erfi) stays finite in double.
inline constexpr double kErfiMaxArgument = 26.5;
inline constexpr double kSqrtPi = 1.0 / std::numbers::inv_sqrtpi;

double erf(double x);
double erfc(double x);

/// Imaginary error function erfi(x) = -i erf(ix) = (2/sqrt(pi)) int_0^x e^{t^2} dt.
/// Throws RangeError for |x| > kErfiMaxArgument.
double erfi(double x);

/// e^{-x^2} erfi(x) for x >= 0. Finite for every finite x; decays like
/// 1/(x sqrt(pi)) so ratios such as u e^{u^2}/erfi(u) can be formed without
/// overflow.
double erfi_scaled(double x);

/// Complementary error function of a complex argument, principal branch.
/// Exact on the real and imaginary axes (erfc(iy) = 1 - i erfi(y)); elsewhere
/// limited to |z| <= 3 where the Maclaurin series is accurate.
ComplexValue erfc_formal(ComplexValue z);

}  // namespace qmorse::specfun
