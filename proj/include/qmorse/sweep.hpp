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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "qmorse/config.hpp"
#include "qmorse/cycle.hpp"

namespace qmorse {

struct Axis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  int steps = 2;

  /// Inclusive linear spacing: value(0) == min, value(steps - 1) == max.
  double value(int i) const;
};

struct SweepGrid {
  Axis axis1;  // slow (row) index
  Axis axis2;  // fast (column) index
  PointConfig fixed;
};

/// Throws ConfigError for steps < 2, min >= max, unknown names, duplicate
/// axes, or an axis the cycle does not read.
void validate(const SweepGrid& grid, CycleKind cycle);

/// Parses {"grid": {"axis1": {...}, "axis2": {...}}, ...} together with the
/// point-config sections.
SweepGrid parse_sweep_grid(const nlohmann::json& doc);

/// One CSV row. A NaN field always comes with a non-empty `reason`.
struct OutputRecord {
  double axis1 = 0.0;
  double axis2 = 0.0;
  double q_hot = 0.0;
  double q_cold = 0.0;
  double work = 0.0;
  double eta = 0.0;
  Regime regime = Regime::kDegenerate;
  bool evaluated = true;  // false when the point itself failed
  Method method = Method::kSum;
  double imag_residue = 0.0;
  double trunc_mass = 0.0;
  std::string reason;
};

/// Sum-oracle and closed-form results for one configuration.
struct PointResult {
  std::optional<CycleResult> sum;
  std::optional<CycleResult> closed;
};

/// Evaluates the cycle with the requested method(s). Model or range errors
/// are propagated; use evaluate_record for the NaN-sentinel behaviour.
CycleResult evaluate_cycle(CycleKind cycle, const PointConfig& config, Method method);
PointResult run_point(CycleKind cycle, const PointConfig& config, Method method);

/// Never throws on numeric problems: failures become NaN fields plus reason.
OutputRecord evaluate_record(CycleKind cycle, const PointConfig& config, Method method, double a1,
                             double a2);

/// Row-major (axis1 outer, axis2 inner); for Method::kBoth each point yields
/// its sum record followed by its closed record.
std::vector<OutputRecord> run_sweep_serial(const SweepGrid& grid, CycleKind cycle, Method method);

/// OpenMP over grid points into a preallocated buffer. Output is identical to
/// run_sweep_serial for every thread count. threads <= 0 keeps the runtime default.
std::vector<OutputRecord> run_sweep_parallel(const SweepGrid& grid, CycleKind cycle, Method method,
                                             int threads = 0);

inline constexpr const char* kCsvHeader =
    "axis1,axis2,Qh,Qc,W,eta,regime,method,imag_residue,trunc_mass,reason";

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records);
void write_json(std::ostream& out, const std::vector<OutputRecord>& records);
nlohmann::json to_json(const OutputRecord& record);
nlohmann::json to_json(const CycleResult& result);

/// Figure presets.
///   fig1: potential curves V_q(x) for q in {0.4, 0.5, 1}, D_e = 10, alpha = 2
///   fig2: Carnot, D_e x q
///   fig3: Otto level diagram (E_n and occupations at B and D) at D_e = 10, q = 1
///   fig4: Otto width protocol, D_e x q
///   fig5: Otto deformation protocol, D_e x alpha
///   fig6: Otto dissociation protocol, alpha x q
struct FigurePreset {
  std::string id;
  CycleKind cycle;
  SweepGrid grid;
};

bool is_grid_figure(const std::string& id);
FigurePreset figure_preset(const std::string& id, int steps = 50);  // fig2, fig4, fig5, fig6

/// Writes the preset as CSV. Grid figures use the sweep schema; fig1 and fig3
/// have their own columns (documented in the README).
void write_figure(std::ostream& out, const std::string& id, Method method, int threads);

}  // namespace qmorse
