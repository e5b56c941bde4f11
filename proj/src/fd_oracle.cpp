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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "qmorse/errors.hpp"
#include "qmorse/spectrum.hpp"

namespace qmorse {

namespace {

constexpr int kMinGridPoints = 2000;
constexpr double kMaxBoundaryAmplitude = 1e-6;

struct Tridiagonal {
  Eigen::VectorXd diag;
  Eigen::VectorXd off;  // constant -p/h^2, stored for Eigen
};

// Interior points x_i = x_min + (i + 1) h, i = 0..n-1; walls at x_min, x_max.
Tridiagonal discretize(const MorseModel& model, double x_min, double x_max, int n) {
  const double h = (x_max - x_min) / (n + 1);
  const double kinetic = model.p() / (h * h);
  Tridiagonal t{Eigen::VectorXd(n), Eigen::VectorXd::Constant(n - 1, -kinetic)};
  for (int i = 0; i < n; ++i) {
    t.diag[i] = 2.0 * kinetic + potential_value(model, x_min + (i + 1) * h);
  }
  return t;
}

void check_domain(const MorseModel& model, double x_min, double x_max, int grid_points) {
  if (grid_points < kMinGridPoints) {
    throw DomainError("fd_schrodinger_oracle: grid_points=" + std::to_string(grid_points) +
                      " below minimum " + std::to_string(kMinGridPoints));
  }
  const double x0 = potential_minimum(model).x0;
  if (!(x_min < x0 && x0 < x_max)) {
    throw DomainError("fd_schrodinger_oracle: potential minimum x0=" + std::to_string(x0) +
                      " outside [" + std::to_string(x_min) + ", " + std::to_string(x_max) + "]");
  }
}

// Lowest eigenvector by inverse iteration; the shifted matrix is SPD so the
// Thomas sweep needs no pivoting.
Eigen::VectorXd ground_state(const Tridiagonal& t, double lowest) {
  const Eigen::Index n = t.diag.size();
  const double shift = lowest - 1e-6 * std::max(1.0, std::abs(lowest));
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd c(n), d(n);
  for (int iter = 0; iter < 8; ++iter) {
    // forward sweep
    double b = t.diag[0] - shift;
    c[0] = (n > 1 ? t.off[0] : 0.0) / b;
    d[0] = v[0] / b;
    for (Eigen::Index i = 1; i < n; ++i) {
      b = t.diag[i] - shift - t.off[i - 1] * c[i - 1];
      c[i] = (i + 1 < n ? t.off[i] : 0.0) / b;
      d[i] = (v[i] - t.off[i - 1] * d[i - 1]) / b;
    }
    v[n - 1] = d[n - 1];
    for (Eigen::Index i = n - 2; i >= 0; --i) v[i] = d[i] - c[i] * v[i + 1];
    v /= v.cwiseAbs().maxCoeff();
  }
  return v;
}

}  // namespace

double fd_boundary_amplitude(const MorseModel& model, double x_min, double x_max, int grid_points) {
  check_domain(model, x_min, x_max, grid_points);
  const Tridiagonal t = discretize(model, x_min, x_max, grid_points);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(t.diag, t.off, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd psi = ground_state(t, solver.eigenvalues()[0]);
  return std::max(std::abs(psi[0]), std::abs(psi[psi.size() - 1]));
}

std::vector<double> fd_schrodinger_oracle(const MorseModel& model, double x_min, double x_max,
                                          int grid_points) {
  check_domain(model, x_min, x_max, grid_points);
  const Tridiagonal t = discretize(model, x_min, x_max, grid_points);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(t.diag, t.off, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw DomainError("fd_schrodinger_oracle: tridiagonal eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();

  const Eigen::VectorXd psi = ground_state(t, ev[0]);
  const double wall = std::max(std::abs(psi[0]), std::abs(psi[psi.size() - 1]));
  if (wall > kMaxBoundaryAmplitude) {
    throw DomainError("fd_schrodinger_oracle: ground-state amplitude at the walls is " +
                      std::to_string(wall) + " (limit " + std::to_string(kMaxBoundaryAmplitude) +
                      "); widen the domain");
  }
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qmorse
