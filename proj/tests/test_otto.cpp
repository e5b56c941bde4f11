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
#include <random>
#include <string>

#include "oracles.hpp"
#include "qmorse/errors.hpp"
#include "qmorse/otto.hpp"

using namespace qmorse;

namespace {

MorseParams shared(double d_e, double alpha, double q) {
  MorseParams p;
  p.dissociation_energy = d_e;
  p.alpha = alpha;
  p.q = q;
  return p;
}

OttoSpec width(double d_e, double q, double a_h, double a_c, double t_h, double t_c) {
  return OttoSpec{OttoProtocol{ChangingWidth{a_h, a_c}, shared(d_e, 1.0, q)}, ThermalEnvironment(t_h),
                  ThermalEnvironment(t_c)};
}

OttoSpec deform(double d_e, double alpha, double q_h, double q_c, double t_h, double t_c) {
  return OttoSpec{OttoProtocol{ChangingDeformation{q_h, q_c}, shared(d_e, alpha, 1.0)}, ThermalEnvironment(t_h),
                  ThermalEnvironment(t_c)};
}

OttoSpec dissoc(double alpha, double q, double d_h, double d_c, double t_h, double t_c) {
  return OttoSpec{OttoProtocol{ChangingDissociation{d_h, d_c}, shared(10.0, alpha, q)}, ThermalEnvironment(t_h),
                  ThermalEnvironment(t_c)};
}

bool closes(const CycleResult& r, double tol) {
  const double scale = std::max({std::fabs(r.q_hot), std::fabs(r.q_cold), 1e-300});
  return std::fabs(r.work - r.q_hot - r.q_cold) <= tol * scale;
}

// Second transcription of the closed-form parameter set, written from the
// printed formulas with per-stroke q and evaluated in long double.
struct DualLambda {
  using C = oracle::cld;
  C root_h, root_c, gamma1_h, gamma1_c, erfc_h, erfc_c;
  oracle::ld l1h, l1c, l2ch, l2hc, l3, l4, l5, l6, l7, l8, l9h, l9c, l10;
  C l11, l12, l13;
};

DualLambda dual_lambda(const MorseParams& h, const MorseParams& c, oracle::ld bh, oracle::ld bc) {
  using ld = oracle::ld;
  using C = oracle::cld;
  DualLambda d;
  const ld p = h.hbar * h.hbar / (2.0L * h.mu * h.r_e * h.r_e);
  const ld xh = h.alpha * h.r_e, xc = c.alpha * c.r_e;
  const ld lh = std::sqrt(h.dissociation_energy / (xh * xh * p));
  const ld lc = std::sqrt(c.dissociation_energy / (xc * xc * p));
  const ld qh = h.q, qc = c.q;
  const ld sp = std::sqrt(oracle::kPi);
  // sqrt(beta xi^2 (-p)) on the principal branch is i sqrt(beta xi^2 p)
  d.root_h = C(0, std::sqrt(bh * xh * xh * p));
  d.root_c = C(0, std::sqrt(bc * xc * xc * p));
  d.gamma1_h = 0.5L * (1 - 2 * lh * qh) * d.root_h;
  d.gamma1_c = 0.5L * (1 - 2 * lc * qc) * d.root_c;
  d.erfc_h = 1.0L - oracle::erf_series(d.gamma1_h, 400);
  d.erfc_c = 1.0L - oracle::erf_series(d.gamma1_c, 400);
  d.l1c = 0.25L * bc * xc * xc * p * (1 - 2 * lc * qc) * (1 - 2 * lc * qc);
  d.l1h = 0.25L * bh * xh * xh * p * (1 - 2 * lh * qh) * (1 - 2 * lh * qh);
  d.l2ch = xh * xh * p * (2 * (lc * qc - 2 * lh * qh) + 1);
  d.l2hc = xc * xc * p * (2 * (lh * qh - 2 * lc * qc) + 1);
  const ld diff = lc * qc - lh * qh;
  d.l3 = 2 * bh * xh * xh * p * diff * diff + 1;
  d.l4 = xc * xc * (2 * p * diff * diff - 1 / (bh * xh * xh));
  d.l5 = 2 * bc * xc * xc * p * diff * diff - 1;
  d.l6 = xh * xh * (2 * lc * qc - 4 * lh * qh + 1) + xc * xc * (2 * lc * qc - 1);
  d.l7 = xc * xc * (-4 * lc * qc + 2 * lh * qh + 1) + xh * xh * (2 * lh * qh - 1);
  d.l8 = xh * xh * (bc + bh + 2 * bc * bh * xc * xc * p * diff * diff) - bc * xc * xc;
  d.l9h = 0.5L * std::sqrt(bh) * xh * std::sqrt(p) * (1 - 2 * lh * qh);
  d.l9c = 0.5L * std::sqrt(bc) * xc * std::sqrt(p) * (1 - 2 * lc * qc);
  d.l10 = sp * std::sqrt(bh) * xh * std::sqrt(p) * oracle::erfi(d.l9h) * d.l8;
  d.l11 = sp * d.l8 - bc * d.root_h * std::exp(d.l1h) * d.l7;
  d.l12 = C(sp * std::sqrt(bc) * xc * xh * xh * std::sqrt(p) * oracle::erfi(d.l9c) * d.l5, 0);
  d.l13 = sp * xh * xh * d.root_c * d.l5 + bc * xc * xc * p * std::exp(d.l1c) * d.l6;
  return d;
}

void same(std::complex<double> got, oracle::cld want, double scale, const char* what) {
  const double err = std::abs(got - std::complex<double>(want));
  const double ref = std::max(scale, static_cast<double>(std::abs(want)));
  CAPTURE(what);
  CHECK(err <= 1e-12 * ref);
}

}  // namespace

TEST_CASE("endpoints differ only in the driven parameter") {
  const auto w = otto_endpoints(width(10, 1, 2.236, 1, 10, 2));
  CHECK(w.model_hot.alpha() == 2.236);
  CHECK(w.model_cold.alpha() == 1.0);
  CHECK(w.model_hot.dissociation_energy() == w.model_cold.dissociation_energy());
  CHECK(w.model_hot.q() == w.model_cold.q());
  const auto q = otto_endpoints(deform(10, 2, 1, 0.8, 10, 2));
  CHECK(q.model_hot.q() == 1.0);
  CHECK(q.model_cold.q() == 0.8);
  CHECK(q.model_hot.alpha() == q.model_cold.alpha());
  const auto d = otto_endpoints(dissoc(2, 1, 10, 5, 10, 2));
  CHECK(d.model_hot.dissociation_energy() == 10.0);
  CHECK(d.model_cold.dissociation_energy() == 5.0);
  CHECK(d.model_hot.alpha() == d.model_cold.alpha());
}

TEST_CASE("endpoint errors name the parameter") {
  auto message = [](const OttoSpec& s) {
    try {
      otto_endpoints(s);
    } catch (const DomainError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(width(10, 0.01, 2.236, 1, 10, 2)).find("alpha_h") != std::string::npos);
  CHECK(message(deform(10, 2, 1, 0.01, 10, 2)).find("q_c") != std::string::npos);
  CHECK(message(dissoc(2, 1, 0.01, 5, 10, 2)).find("D_h") != std::string::npos);
  CHECK_THROWS_AS(otto_endpoints(deform(10, 2, 1.2, 0.8, 10, 2)), DomainError);
}

TEST_CASE("sum cycle degeneracies") {
  const CycleResult same_model = otto_cycle_sum(width(10, 1, 2, 2, 10, 2));
  CHECK(same_model.work == 0.0);
  CHECK(same_model.q_hot == -same_model.q_cold);
  CHECK(same_model.regime == Regime::kDegenerate);
  const CycleResult frozen = otto_cycle_sum(width(10, 1, 2, 2, 4, 4));
  CHECK(frozen.q_hot == 0.0);
  CHECK(frozen.q_cold == 0.0);
  CHECK(frozen.work == 0.0);
  CHECK(otto_cycle_sum(deform(10, 2, 0.9, 0.9, 10, 2)).work == 0.0);
  CHECK(otto_cycle_sum(dissoc(2, 1, 7, 7, 10, 2)).work == 0.0);
}

TEST_CASE("two-level desk case") {
  MorseParams p = shared(8, 1.0, 1.0);
  const OttoSpec s{OttoProtocol{ChangingWidth{2.0, 1.0}, p}, ThermalEnvironment(10), ThermalEnvironment(2)};
  const auto ends = otto_endpoints(s);
  REQUIRE(n_max(ends.model_hot) == 1);
  REQUIRE(n_max(ends.model_cold) == 3);
  CHECK(eigenvalue(ends.model_cold, 0) == doctest::Approx(-6.125));
  CHECK(eigenvalue(ends.model_cold, 1) == doctest::Approx(-3.125));
  const double p0b = 1.0 / (1.0 + std::exp(-0.4));
  const double p0d = 1.0 / (1.0 + std::exp(-1.5));
  const double want = ((-4.5 + 6.125) - (-0.5 + 3.125)) * (p0b - p0d);
  const CycleResult r = otto_cycle_sum(s);
  CHECK(std::fabs(r.work - want) <= 1e-12);
  CHECK(r.truncated_mass > 0.0);
  CHECK(closes(r, 1e-12));
}

TEST_CASE("property: sum cycles close and respect the Carnot bound") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> de(3, 60), al(0.3, 3), qq(0.2, 1), th(1, 40), tr(0.02, 0.98);
  int done = 0;
  for (int i = 0; i < 3000 && done < 1000; ++i) {
    const double t_h = th(rng), t_c = t_h * tr(rng);
    OttoSpec s = width(de(rng), qq(rng), al(rng), al(rng), t_h, t_c);
    switch (i % 3) {
      case 1: s = deform(de(rng), al(rng), qq(rng), qq(rng), t_h, t_c); break;
      case 2: s = dissoc(al(rng), qq(rng), de(rng), de(rng), t_h, t_c); break;
      default: break;
    }
    try {
      otto_endpoints(s);
    } catch (const DomainError&) {
      continue;
    }
    const CycleResult r = otto_cycle_sum(s);
    CHECK(closes(r, 1e-12));
    if (r.efficiency) CHECK(*r.efficiency <= 1.0 - t_c / t_h + 1e-9);
    ++done;
  }
  CHECK(done == 1000);
}

TEST_CASE("lambda set degeneracies") {
  const OttoSpec s = width(10, 0.9, 1.5, 1.5, 10, 2);
  const LambdaSet l = lambda_set(s);
  CHECK(l.lambda3_ch == 1.0);
  CHECK(l.lambda5_ch == -1.0);
  const double xi2 = 1.5 * 1.5;
  CHECK(l.lambda4_ch == doctest::Approx(-xi2 / (0.1 * xi2)).epsilon(1e-14));
}

TEST_CASE("lambda set at the caption point is finite") {
  const LambdaSet l = lambda_set(width(10, 1, 2.236, 1, 10, 2));
  for (double v : {l.lambda1_h, l.lambda1_c, l.lambda2_ch, l.lambda2_hc_star, l.lambda3_ch, l.lambda4_ch,
                   l.lambda5_ch, l.lambda6_ch, l.lambda7_ch, l.lambda8_ch, l.lambda9_h, l.lambda9_c, l.lambda10}) {
    CHECK(std::isfinite(v));
  }
  for (auto v : {l.root_h, l.root_c, l.gamma1_h, l.gamma1_c, l.erfc_h, l.erfc_c, l.tau_h, l.tau_c, l.lambda11,
                 l.lambda12, l.lambda13, l.ratio10, l.r0, l.r1}) {
    CHECK(std::isfinite(v.real()));
    CHECK(std::isfinite(v.imag()));
  }
}

TEST_CASE("property: two transcriptions of the parameter set agree on 100 random specs") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> de(2, 20), al(0.5, 2.5), qq(0.5, 1), th(2, 20), tr(0.1, 0.9);
  int done = 0;
  for (int i = 0; i < 1000 && done < 100; ++i) {
    const double t_h = th(rng), t_c = t_h * tr(rng);
    OttoSpec s = width(de(rng), qq(rng), al(rng), al(rng), t_h, t_c);
    if (i % 3 == 1) s = deform(de(rng), al(rng), qq(rng), qq(rng), t_h, t_c);
    if (i % 3 == 2) s = dissoc(al(rng), qq(rng), de(rng), de(rng), t_h, t_c);
    std::optional<OttoEndpoints> ends;
    try {
      ends.emplace(otto_endpoints(s));
    } catch (const DomainError&) {
      continue;
    }
    const LambdaSet l = lambda_set(s);
    const DualLambda d = dual_lambda(ends->model_hot.params(), ends->model_cold.params(), 1.0L / t_h, 1.0L / t_c);
    const double e2 = std::max(ends->model_hot.energy_scale(), ends->model_cold.energy_scale());
    const double k = ends->model_hot.lambda() * ends->model_hot.q() + ends->model_cold.lambda() * ends->model_cold.q();
    same(l.root_h, d.root_h, 0, "root_h");
    same(l.root_c, d.root_c, 0, "root_c");
    same(l.gamma1_h, d.gamma1_h, 0, "gamma1_h");
    same(l.gamma1_c, d.gamma1_c, 0, "gamma1_c");
    same(l.erfc_h, d.erfc_h, 0, "erfc_h");
    same(l.erfc_c, d.erfc_c, 0, "erfc_c");
    same(l.tau_h, d.erfc_h / static_cast<oracle::ld>(t_h), 0, "tau_h");
    same(l.tau_c, d.erfc_c / static_cast<oracle::ld>(t_c), 0, "tau_c");
    same(l.lambda1_h, d.l1h, 0, "lambda1_h");
    same(l.lambda1_c, d.l1c, 0, "lambda1_c");
    same(l.lambda2_ch, d.l2ch, e2 * (1 + 6 * k), "lambda2_ch");
    same(l.lambda2_hc_star, d.l2hc, e2 * (1 + 6 * k), "lambda2_hc*");
    same(l.lambda3_ch, d.l3, 1, "lambda3_ch");
    same(l.lambda4_ch, d.l4, std::fabs(static_cast<double>(d.l4)) + e2, "lambda4_ch");
    same(l.lambda5_ch, d.l5, 1, "lambda5_ch");
    same(l.lambda6_ch, d.l6, e2 * (1 + 6 * k), "lambda6_ch");
    same(l.lambda7_ch, d.l7, e2 * (1 + 6 * k), "lambda7_ch");
    same(l.lambda8_ch, d.l8, e2, "lambda8_ch");
    same(l.lambda9_h, d.l9h, 0, "lambda9_h");
    same(l.lambda9_c, d.l9c, 0, "lambda9_c");
    same(l.lambda10, d.l10, 0, "lambda10");
    same(l.lambda11, d.l11, 0, "lambda11");
    same(l.lambda12, d.l12, 0, "lambda12");
    same(l.lambda13, d.l13, 0, "lambda13");
    same(l.ratio10, d.l10 / d.root_h, 0, "ratio10");
    same(l.r0, d.l12 + d.l13, std::abs(d.l12) + std::abs(d.l13), "r0");
    same(l.r1, d.root_c * d.root_c * d.root_c * d.erfc_c, 0, "r1");
    ++done;
  }
  CHECK(done == 100);
}

TEST_CASE("closed heats at the caption point") {
  const OttoSpec s = width(10, 0.97, 2.236, 1, 10, 2);
  CHECK(otto_hot_heat_closed(s).real() > 0.0);
  CHECK(otto_cold_heat_closed(s).real() < 0.0);
}

TEST_CASE("closed heats cancel for identical strokes at one temperature") {
  const OttoSpec s = width(12, 0.9, 1.5, 1.5, 4, 4);
  const auto qh = otto_hot_heat_closed(s).real();
  const auto qc = otto_cold_heat_closed(s).real();
  CHECK(std::fabs(qh + qc) <= 1e-9 * std::max(1.0, std::fabs(qh)));
}

TEST_CASE("property: closed heats and work close") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> de(3, 40), al(0.5, 3), qq(0.3, 1), th(2, 30), tr(0.1, 0.9);
  int done = 0;
  for (int i = 0; i < 1000 && done < 200; ++i) {
    const double t_h = th(rng);
    const OttoSpec s = i % 2 ? width(de(rng), qq(rng), al(rng), al(rng), t_h, t_h * tr(rng))
                             : deform(de(rng), al(rng), qq(rng), qq(rng), t_h, t_h * tr(rng));
    try {
      const double gap = otto_closure_gap(s);
      const double scale = std::max(1.0, std::fabs(otto_hot_heat_closed(s).real()));
      CHECK(gap <= 1e-9 * scale);
      const CycleResult r = otto_cycle_closed(s);
      CHECK(closes(r, 1e-9));
      const auto eta = otto_efficiency_closed(s);
      // the single-fraction form is W/Q_h taken before the real part
      if (eta.explicit_form) {
        const auto w_over_q = otto_work_closed(s) / otto_hot_heat_closed(s);
        CHECK(std::fabs(*eta.explicit_form - w_over_q.real()) <= 1e-9 * std::max(1.0, std::abs(w_over_q)));
      }
      if (eta.ratio) CHECK(*eta.ratio == doctest::Approx(r.work / r.q_hot).epsilon(1e-12));
      ++done;
    } catch (const DomainError&) {
    } catch (const RangeError&) {
    }
  }
  CHECK(done == 200);
}

TEST_CASE("dense spectrum: closed heats within 10% and efficiency within 0.05") {
  const OttoSpec s = width(200, 1, 0.1, 0.08, 50, 20);
  const auto ends = otto_endpoints(s);
  REQUIRE(n_max(ends.model_hot) >= 100);
  const CycleResult sum = otto_cycle_sum(s);
  const CycleResult closed = otto_cycle_closed(s);
  CHECK(oracle::rel(closed.q_hot, sum.q_hot) <= 0.10);
  CHECK(oracle::rel(closed.q_cold, sum.q_cold) <= 0.10);
  REQUIRE(sum.efficiency.has_value());
  const auto eta = otto_efficiency_closed(s);
  REQUIRE(eta.explicit_form.has_value());
  CHECK(std::fabs(*eta.explicit_form - *sum.efficiency) <= 0.05);
}

TEST_CASE("closed efficiency undefined without heat intake") {
  const OttoSpec s = width(3, 1, 2.0, 0.5, 10, 2);
  REQUIRE(otto_hot_heat_closed(s).real() <= 0.0);
  const auto eta = otto_efficiency_closed(s);
  CHECK_FALSE(eta.explicit_form.has_value());
  CHECK_FALSE(eta.ratio.has_value());
  CHECK_FALSE(otto_cycle_closed(s).efficiency.has_value());
}
