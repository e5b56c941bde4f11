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

#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "qmorse/carnot.hpp"
#include "qmorse/otto.hpp"

namespace qmorse {

enum class CycleKind { kCarnot, kOttoWidth, kOttoDeform, kOttoDissoc };
enum class Method { kSum, kClosed, kBoth };

std::string_view cycle_name(CycleKind cycle);
std::string_view method_name(Method method);
CycleKind parse_cycle(std::string_view name);    // ConfigError on unknown names
Method parse_method(std::string_view name);

struct Units {
  double hbar = 1.0;
  double mu = 1.0;
  double r_e = 1.0;
  double k_boltzmann = 1.0;
};

/// Every parameter any cycle can use. Defaults are the Carnot / width-protocol
/// caption values (alpha_h = 2.236, alpha_c = 1, T_h = 10, T_c = 2).
struct PointConfig {
  Units units;
  double dissociation_energy = 10.0;
  double alpha = 2.0;
  double q = 1.0;
  double t_hot = 10.0;
  double t_cold = 2.0;
  double alpha_hot = 2.236;
  double alpha_cold = 1.0;
  double q_hot = 1.0;
  double q_cold = 0.8;
  double d_hot = 10.0;
  double d_cold = 5.0;
  CarnotMode carnot_mode = CarnotMode::kPaper;

  MorseParams base_params() const;
};

/// Sets one of D_e, alpha, q, T_h, T_c, alpha_h, alpha_c, q_h, q_c, D_h, D_c.
void set_parameter(PointConfig& config, std::string_view name, double value);
bool is_parameter_name(std::string_view name);
/// Whether `name` is something the given cycle actually reads.
bool cycle_uses_parameter(CycleKind cycle, std::string_view name);

CarnotSpec carnot_spec(const PointConfig& config);
OttoSpec otto_spec(const PointConfig& config, CycleKind cycle);

/// Reads units / model / baths / protocol sections on top of `base`.
/// Throws ConfigError carrying the JSON path of the bad field.
PointConfig parse_point_config(const nlohmann::json& doc, PointConfig base = {});

}  // namespace qmorse
