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

#include "qmorse/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>
#include <omp.h>

#include "qmorse/errors.hpp"

namespace qmorse {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void append_reason(std::string& reason, std::string_view text) {
  if (!reason.empty()) reason += "; ";
  for (char ch : text) reason += (ch == ',' || ch == '\n') ? ';' : ch;
}

Axis parse_axis(const nlohmann::json& doc, const std::string& path) {
  if (!doc.is_object()) throw ConfigError(path, "expected an object");
  Axis axis;
  if (!doc.contains("name") || !doc.at("name").is_string()) {
    throw ConfigError(path + ".name", "expected a parameter name");
  }
  axis.name = doc.at("name").get<std::string>();
  auto number = [&](const char* key) {
    if (!doc.contains(key) || !doc.at(key).is_number()) {
      throw ConfigError(path + "." + key, "expected a number");
    }
    return doc.at(key).get<double>();
  };
  axis.min = number("min");
  axis.max = number("max");
  if (!doc.contains("steps") || !doc.at("steps").is_number_integer()) {
    throw ConfigError(path + ".steps", "expected an integer");
  }
  axis.steps = doc.at("steps").get<int>();
  return axis;
}

void validate_axis(const Axis& axis, const std::string& path, CycleKind cycle) {
  if (!is_parameter_name(axis.name)) {
    throw ConfigError(path + ".name", "unknown parameter '" + axis.name + "'");
  }
  if (!cycle_uses_parameter(cycle, axis.name)) {
    throw ConfigError(path + ".name", "parameter '" + axis.name + "' is not used by cycle " +
                                          std::string(cycle_name(cycle)));
  }
  if (axis.steps < 2) throw ConfigError(path + ".steps", "must be at least 2");
  if (!(axis.min < axis.max)) throw ConfigError(path + ".min", "must be below max");
}

OutputRecord to_record(const CycleResult& r, Method method, double a1, double a2) {
  OutputRecord rec;
  rec.axis1 = a1;
  rec.axis2 = a2;
  rec.q_hot = r.q_hot;
  rec.q_cold = r.q_cold;
  rec.work = r.work;
  rec.regime = r.regime;
  rec.method = method;
  rec.imag_residue = r.imag_residue;
  rec.trunc_mass = r.truncated_mass;
  if (r.efficiency) {
    rec.eta = *r.efficiency;
  } else {
    rec.eta = kNaN;
    append_reason(rec.reason, r.regime == Regime::kDegenerate ? "eta undefined: degenerate cycle (W = 0)"
                                                              : "eta undefined: Q_h <= 0");
  }
  if (std::isnan(rec.imag_residue)) append_reason(rec.reason, "formal residue out of erfc range");
  return rec;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  return fmt::format("{:.12g}", x);
}

}  // namespace

double Axis::value(int i) const {
  if (i >= steps - 1) return max;
  return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void validate(const SweepGrid& grid, CycleKind cycle) {
  validate_axis(grid.axis1, "grid.axis1", cycle);
  validate_axis(grid.axis2, "grid.axis2", cycle);
  if (grid.axis1.name == grid.axis2.name) {
    throw ConfigError("grid.axis2.name", "both axes drive '" + grid.axis1.name + "'");
  }
}

SweepGrid parse_sweep_grid(const nlohmann::json& doc) {
  SweepGrid grid;
  grid.fixed = parse_point_config(doc);
  if (!doc.contains("grid") || !doc.at("grid").is_object()) {
    throw ConfigError("grid", "expected an object with axis1 and axis2");
  }
  const auto& g = doc.at("grid");
  if (!g.contains("axis1")) throw ConfigError("grid.axis1", "missing");
  if (!g.contains("axis2")) throw ConfigError("grid.axis2", "missing");
  grid.axis1 = parse_axis(g.at("axis1"), "grid.axis1");
  grid.axis2 = parse_axis(g.at("axis2"), "grid.axis2");
  return grid;
}

CycleResult evaluate_cycle(CycleKind cycle, const PointConfig& config, Method method) {
  const bool closed = method == Method::kClosed;
  if (cycle == CycleKind::kCarnot) {
    const CarnotSpec spec = carnot_spec(config);
    return closed ? carnot_cycle_closed(spec) : carnot_cycle_sum(spec);
  }
  const OttoSpec spec = otto_spec(config, cycle);
  return closed ? otto_cycle_closed(spec) : otto_cycle_sum(spec);
}

PointResult run_point(CycleKind cycle, const PointConfig& config, Method method) {
  PointResult out;
  if (method != Method::kClosed) out.sum = evaluate_cycle(cycle, config, Method::kSum);
  if (method != Method::kSum) out.closed = evaluate_cycle(cycle, config, Method::kClosed);
  return out;
}

OutputRecord evaluate_record(CycleKind cycle, const PointConfig& config, Method method, double a1,
                             double a2) {
  try {
    return to_record(evaluate_cycle(cycle, config, method), method, a1, a2);
  } catch (const std::exception& e) {
    OutputRecord rec;
    rec.axis1 = a1;
    rec.axis2 = a2;
    rec.q_hot = rec.q_cold = rec.work = rec.eta = kNaN;
    rec.imag_residue = rec.trunc_mass = kNaN;
    rec.evaluated = false;
    rec.method = method;
    append_reason(rec.reason, e.what());
    return rec;
  }
}

namespace {

std::vector<Method> expand(Method method) {
  if (method == Method::kBoth) return {Method::kSum, Method::kClosed};
  return {method};
}

// Shared by both kernels so they differ only in the loop driver.
void fill_point(const SweepGrid& grid, CycleKind cycle, const std::vector<Method>& methods,
                std::size_t index, std::vector<OutputRecord>& out) {
  const int i = static_cast<int>(index / static_cast<std::size_t>(grid.axis2.steps));
  const int j = static_cast<int>(index % static_cast<std::size_t>(grid.axis2.steps));
  const double a1 = grid.axis1.value(i);
  const double a2 = grid.axis2.value(j);
  PointConfig config = grid.fixed;
  set_parameter(config, grid.axis1.name, a1);
  set_parameter(config, grid.axis2.name, a2);
  for (std::size_t k = 0; k < methods.size(); ++k) {
    out[index * methods.size() + k] = evaluate_record(cycle, config, methods[k], a1, a2);
  }
}

}  // namespace

std::vector<OutputRecord> run_sweep_serial(const SweepGrid& grid, CycleKind cycle, Method method) {
  validate(grid, cycle);
  const std::vector<Method> methods = expand(method);
  const std::size_t points = static_cast<std::size_t>(grid.axis1.steps) * grid.axis2.steps;
  std::vector<OutputRecord> out(points * methods.size());
  for (std::size_t idx = 0; idx < points; ++idx) fill_point(grid, cycle, methods, idx, out);
  return out;
}

std::vector<OutputRecord> run_sweep_parallel(const SweepGrid& grid, CycleKind cycle, Method method,
                                             int threads) {
  validate(grid, cycle);
  const std::vector<Method> methods = expand(method);
  const long points = static_cast<long>(grid.axis1.steps) * grid.axis2.steps;
  std::vector<OutputRecord> out(static_cast<std::size_t>(points) * methods.size());
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nt)
  for (long idx = 0; idx < points; ++idx) {
    fill_point(grid, cycle, methods, static_cast<std::size_t>(idx), out);
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
  out << kCsvHeader << '\n';
  for (const OutputRecord& r : records) {
    out << format_number(r.axis1) << ',' << format_number(r.axis2) << ',' << format_number(r.q_hot)
        << ',' << format_number(r.q_cold) << ',' << format_number(r.work) << ','
        << format_number(r.eta) << ',' << (r.evaluated ? regime_name(r.regime) : "none") << ','
        << method_name(r.method) << ',' << format_number(r.imag_residue) << ','
        << format_number(r.trunc_mass) << ',' << r.reason << '\n';
  }
}

namespace {

nlohmann::json number_or_null(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const OutputRecord& r) {
  return {{"axis1", r.axis1},
          {"axis2", r.axis2},
          {"Qh", number_or_null(r.q_hot)},
          {"Qc", number_or_null(r.q_cold)},
          {"W", number_or_null(r.work)},
          {"eta", number_or_null(r.eta)},
          {"regime", r.evaluated ? std::string(regime_name(r.regime)) : "none"},
          {"method", std::string(method_name(r.method))},
          {"imag_residue", number_or_null(r.imag_residue)},
          {"trunc_mass", number_or_null(r.trunc_mass)},
          {"reason", r.reason}};
}

nlohmann::json to_json(const CycleResult& r) {
  return {{"Qh", r.q_hot},
          {"Qc", r.q_cold},
          {"W", r.work},
          {"eta", r.efficiency ? nlohmann::json(*r.efficiency) : nlohmann::json(nullptr)},
          {"regime", std::string(regime_name(r.regime))},
          {"imag_residue", number_or_null(r.imag_residue)},
          {"trunc_mass", r.truncated_mass}};
}

void write_json(std::ostream& out, const std::vector<OutputRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const OutputRecord& r : records) arr.push_back(to_json(r));
  out << arr.dump(1) << '\n';
}

bool is_grid_figure(const std::string& id) {
  return id == "fig2" || id == "fig4" || id == "fig5" || id == "fig6";
}

FigurePreset figure_preset(const std::string& id, int steps) {
  PointConfig fixed;  // T_h = 10, T_c = 2, alpha_h = 2.236, alpha_c = 1
  if (id == "fig2") {
    return {id, CycleKind::kCarnot, {{"D_e", 5.0, 15.0, steps}, {"q", 0.1, 1.0, steps}, fixed}};
  }
  if (id == "fig4") {
    return {id, CycleKind::kOttoWidth, {{"D_e", 5.0, 15.0, steps}, {"q", 0.1, 1.0, steps}, fixed}};
  }
  if (id == "fig5") {
    fixed.q_hot = 1.0;
    fixed.q_cold = 0.8;
    return {id, CycleKind::kOttoDeform, {{"D_e", 5.0, 15.0, steps}, {"alpha", 1.0, 3.0, steps}, fixed}};
  }
  if (id == "fig6") {
    fixed.d_hot = 10.0;
    fixed.d_cold = 5.0;
    return {id, CycleKind::kOttoDissoc, {{"alpha", 1.0, 3.0, steps}, {"q", 0.1, 1.0, steps}, fixed}};
  }
  throw ConfigError("figure", "no grid preset '" + id + "'");
}

void write_figure(std::ostream& out, const std::string& id, Method method, int threads) {
  if (is_grid_figure(id)) {
    const FigurePreset preset = figure_preset(id);
    write_csv(out, run_sweep_parallel(preset.grid, preset.cycle, method, threads));
    return;
  }
  if (id == "fig1") {
    const double qs[] = {0.4, 0.5, 1.0};
    out << "x,V_q0.4,V_q0.5,V_q1\n";
    for (int i = 0; i <= 200; ++i) {
      const double x = -0.5 + 3.5 * i / 200.0;
      out << format_number(x);
      for (double q : qs) {
        MorseParams p;
        p.dissociation_energy = 10.0;
        p.alpha = 2.0;
        p.q = q;
        out << ',' << format_number(potential_value(MorseModel(p), x));
      }
      out << '\n';
    }
    return;
  }
  if (id == "fig3") {
    const PointConfig config;
    const OttoEndpoints ends = otto_endpoints(otto_spec(config, CycleKind::kOttoWidth));
    const BoundSpectrum hot = bound_spectrum(ends.model_hot);
    const BoundSpectrum cold = bound_spectrum(ends.model_cold);
    const ThermalState b = thermal_state(ends.model_hot, ThermalEnvironment(config.t_hot));
    const ThermalState d = thermal_state(ends.model_cold, ThermalEnvironment(config.t_cold));
    out << "n,E_hot,E_cold,P_B,P_D\n";
    const std::size_t levels = std::max(hot.levels.size(), cold.levels.size());
    for (std::size_t n = 0; n < levels; ++n) {
      auto at = [n](const std::vector<double>& v) { return n < v.size() ? format_number(v[n]) : ""; };
      out << n << ',' << at(hot.levels) << ',' << at(cold.levels) << ',' << at(b.occupations) << ','
          << at(d.occupations) << '\n';
    }
    return;
  }
  throw ConfigError("figure", "unknown figure '" + id + "' (expected fig1..fig6)");
}

}  // namespace qmorse
