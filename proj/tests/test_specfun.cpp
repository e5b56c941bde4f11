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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "qmorse/errors.hpp"
#include "qmorse/specfun.hpp"

using namespace qmorse;
using doctest::Approx;

TEST_CASE("erf values") {
  CHECK(specfun::erf(0.0) == 0.0);
  CHECK(specfun::erf(0.7) == -specfun::erf(-0.7));
  CHECK(std::fabs(specfun::erf(1.0) - 0.842700792949715) <= 1e-12);
  CHECK(std::fabs(specfun::erf(1.0) - static_cast<double>(oracle::erf(1.0L, 40))) <= 1e-12);
}

TEST_CASE("erfc values") {
  CHECK(specfun::erfc(0.0) == 1.0);
  CHECK(std::fabs(specfun::erfc(1.3) + specfun::erfc(-1.3) - 2.0) <= 1e-15);
  CHECK(std::fabs(specfun::erfc(2.0) - 0.004677734981063) <= 1e-12);
  CHECK(std::fabs(specfun::erfc(2.0) - static_cast<double>(1.0L - oracle::erf(2.0L))) <= 1e-12);
}

TEST_CASE("erfi values") {
  CHECK(specfun::erfi(0.0) == 0.0);
  CHECK(specfun::erfi(-2.1) == -specfun::erfi(2.1));
  CHECK(std::fabs(specfun::erfi(2.0) - 18.5648024145756) <= 1e-8);
  CHECK(std::fabs(specfun::erfi(2.0) - static_cast<double>(oracle::erfi(2.0L, 60))) <= 1e-8);
}

TEST_CASE("erfi range error carries the threshold") {
  try {
    specfun::erfi(30.0);
    FAIL("expected RangeError");
  } catch (const RangeError& e) {
    CHECK(e.threshold() == specfun::kErfiMaxArgument);
  }
  CHECK(std::isfinite(specfun::erfi(26.0)));
}

TEST_CASE("erfi_scaled values") {
  CHECK(specfun::erfi_scaled(0.0) == 0.0);
  CHECK(std::fabs(specfun::erfi_scaled(2.0) - 18.5648024145756 * std::exp(-4.0)) <= 1e-8);
  const double asym = 1.0 / (20.0 * specfun::kSqrtPi) * (1.0 + 1.0 / 800.0 + 3.0 / (800.0 * 800.0));
  CHECK(std::fabs(specfun::erfi_scaled(20.0) - asym) <= 1e-6);
  CHECK(std::isfinite(specfun::erfi_scaled(1e6)));
  CHECK_THROWS_AS(specfun::erfi_scaled(-1.0), DomainError);
}

TEST_CASE("non-finite inputs are domain errors") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(specfun::erf(nan), DomainError);
  CHECK_THROWS_AS(specfun::erfc(inf), DomainError);
  CHECK_THROWS_AS(specfun::erfi(nan), DomainError);
}

TEST_CASE("erfc_formal on the axes") {
  const auto z0 = specfun::erfc_formal({0.0, 0.0});
  CHECK(z0.real() == 1.0);
  CHECK(z0.imag() == 0.0);
  const auto z1 = specfun::erfc_formal({0.0, 1.5});
  CHECK(z1.real() == 1.0);
  CHECK(z1.imag() == Approx(-specfun::erfi(1.5)).epsilon(1e-14));
  const auto z2 = specfun::erfc_formal({0.0, -2.121320});
  CHECK(z2.real() == 1.0);
  CHECK(std::fabs(z2.imag() - static_cast<double>(oracle::erfi(2.121320L))) <= 1e-10);
  CHECK_THROWS_AS(specfun::erfc_formal({0.0, 27.0}), RangeError);
}

TEST_CASE("erfc_formal off the axes matches the complex series") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const double x = d(rng), y = d(rng);
    const auto got = specfun::erfc_formal({x, y});
    const auto want = 1.0L - oracle::erf_series({x, y});
    CHECK(std::abs(got - std::complex<double>(want)) <= 1e-12 * std::max(1.0, std::abs(got)));
  }
}

TEST_CASE("property: erf + erfc = 1 on 1000 random points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-6.0, 6.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = d(rng);
    worst = std::max(worst, std::fabs(specfun::erf(x) + specfun::erfc(x) - 1.0));
  }
  CHECK(worst <= 1e-14);
}

TEST_CASE("property: real-axis erfc_formal equals erfc") {
  for (double x = -5.0; x <= 5.0; x += 0.05) {
    const auto z = specfun::erfc_formal({x, 0.0});
    CHECK(std::fabs(z.real() - specfun::erfc(x)) <= 1e-12);
    CHECK(z.imag() == 0.0);
  }
}

TEST_CASE("property: erfi odd and erfi_scaled consistent") {
  for (double x = 0.0; x <= 26.0; x += 0.1) {
    CHECK(specfun::erfi(-x) == -specfun::erfi(x));
    const double lhs = specfun::erfi_scaled(x) * std::exp(x * x);
    CHECK(oracle::rel(lhs, specfun::erfi(x)) <= 1e-9);
  }
}

TEST_CASE("property: erfi tracks the long-double series across the crossover") {
  for (double x = 0.05; x <= 9.0; x += 0.05) {
    CHECK(oracle::rel(specfun::erfi(x), static_cast<double>(oracle::erfi(x))) <= 1e-12);
  }
}

TEST_CASE("property: erf strictly increasing") {
  double prev = specfun::erf(-5.9);
  for (double x = -5.8; x <= 5.9; x += 0.1) {
    const double v = specfun::erf(x);
    if (std::fabs(x) < 5.5) CHECK(v > prev);  // saturates to 1 in double beyond ~5.9
    prev = v;
  }
}
