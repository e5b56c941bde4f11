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

#include "qmorse/config.hpp"

#include <array>
#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "qmorse/errors.hpp"

namespace qmorse {

namespace {

constexpr std::array<std::string_view, 11> kParameterNames = {
    "D_e", "alpha", "q", "T_h", "T_c", "alpha_h", "alpha_c", "q_h", "q_c", "D_h", "D_c"};

double read_number(const nlohmann::json& obj, const char* key, const std::string& path, double fallback) {
  if (!obj.contains(key)) return fallback;
  const nlohmann::json& v = obj.at(key);
  const std::string field = path + "." + key;
  if (!v.is_number()) throw ConfigError(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(field, "must be finite");
  return x;
}

const nlohmann::json* section(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) return nullptr;
  const nlohmann::json& s = doc.at(key);
  if (!s.is_object()) throw ConfigError(key, "expected an object");
  return &s;
}

}  // namespace

std::string_view cycle_name(CycleKind cycle) {
  switch (cycle) {
    case CycleKind::kCarnot: return "carnot";
    case CycleKind::kOttoWidth: return "otto-width";
    case CycleKind::kOttoDeform: return "otto-deform";
    case CycleKind::kOttoDissoc: return "otto-dissoc";
  }
  return "carnot";
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kSum: return "sum";
    case Method::kClosed: return "closed";
    case Method::kBoth: return "both";
  }
  return "sum";
}

CycleKind parse_cycle(std::string_view name) {
  for (CycleKind c : {CycleKind::kCarnot, CycleKind::kOttoWidth, CycleKind::kOttoDeform,
                      CycleKind::kOttoDissoc}) {
    if (cycle_name(c) == name) return c;
  }
  throw ConfigError("cycle", "unknown cycle '" + std::string(name) + "'");
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::kSum, Method::kClosed, Method::kBoth}) {
    if (method_name(m) == name) return m;
  }
  throw ConfigError("method", "unknown method '" + std::string(name) + "'");
}

MorseParams PointConfig::base_params() const {
  return {dissociation_energy, alpha, q, units.r_e, units.mu, units.hbar};
}

bool is_parameter_name(std::string_view name) {
  return std::find(kParameterNames.begin(), kParameterNames.end(), name) != kParameterNames.end();
}

void set_parameter(PointConfig& c, std::string_view name, double value) {
  if (name == "D_e") c.dissociation_energy = value;
  else if (name == "alpha") c.alpha = value;
  else if (name == "q") c.q = value;
  else if (name == "T_h") c.t_hot = value;
  else if (name == "T_c") c.t_cold = value;
  else if (name == "alpha_h") c.alpha_hot = value;
  else if (name == "alpha_c") c.alpha_cold = value;
  else if (name == "q_h") c.q_hot = value;
  else if (name == "q_c") c.q_cold = value;
  else if (name == "D_h") c.d_hot = value;
  else if (name == "D_c") c.d_cold = value;
  else throw ConfigError("parameter", "unknown parameter '" + std::string(name) + "'");
}

bool cycle_uses_parameter(CycleKind cycle, std::string_view name) {
  if (name == "T_h" || name == "T_c") return true;
  switch (cycle) {
    case CycleKind::kCarnot:
    case CycleKind::kOttoWidth:
      return name == "D_e" || name == "q" || name == "alpha_h" || name == "alpha_c";
    case CycleKind::kOttoDeform:
      return name == "D_e" || name == "alpha" || name == "q_h" || name == "q_c";
    case CycleKind::kOttoDissoc:
      return name == "alpha" || name == "q" || name == "D_h" || name == "D_c";
  }
  return false;
}

CarnotSpec carnot_spec(const PointConfig& c) {
  if (c.carnot_mode == CarnotMode::kStrict) {
    return make_carnot_strict(c.base_params(), c.alpha_hot, c.t_hot, c.t_cold, c.units.k_boltzmann);
  }
  return make_carnot_paper(c.base_params(), c.alpha_hot, c.alpha_cold, c.t_hot, c.t_cold,
                           c.units.k_boltzmann);
}

OttoSpec otto_spec(const PointConfig& c, CycleKind cycle) {
  OttoProtocol protocol{ChangingWidth{c.alpha_hot, c.alpha_cold}, c.base_params()};
  switch (cycle) {
    case CycleKind::kOttoWidth: break;
    case CycleKind::kOttoDeform: protocol.drive = ChangingDeformation{c.q_hot, c.q_cold}; break;
    case CycleKind::kOttoDissoc: protocol.drive = ChangingDissociation{c.d_hot, c.d_cold}; break;
    case CycleKind::kCarnot: throw ConfigError("cycle", "carnot is not an Otto protocol");
  }
  return {protocol, ThermalEnvironment(c.t_hot, c.units.k_boltzmann),
          ThermalEnvironment(c.t_cold, c.units.k_boltzmann)};
}

PointConfig parse_point_config(const nlohmann::json& doc, PointConfig c) {
  if (!doc.is_object()) throw ConfigError("$", "config must be a JSON object");
  if (const auto* u = section(doc, "units")) {
    c.units.hbar = read_number(*u, "hbar", "units", c.units.hbar);
    c.units.mu = read_number(*u, "mu", "units", c.units.mu);
    c.units.r_e = read_number(*u, "re", "units", c.units.r_e);
    c.units.k_boltzmann = read_number(*u, "kB", "units", c.units.k_boltzmann);
  }
  if (const auto* m = section(doc, "model")) {
    c.dissociation_energy = read_number(*m, "De", "model", c.dissociation_energy);
    c.alpha = read_number(*m, "alpha", "model", c.alpha);
    c.q = read_number(*m, "q", "model", c.q);
  }
  if (const auto* b = section(doc, "baths")) {
    c.t_hot = read_number(*b, "Th", "baths", c.t_hot);
    c.t_cold = read_number(*b, "Tc", "baths", c.t_cold);
  }
  if (const auto* p = section(doc, "protocol")) {
    c.alpha_hot = read_number(*p, "alpha_h", "protocol", c.alpha_hot);
    c.alpha_cold = read_number(*p, "alpha_c", "protocol", c.alpha_cold);
    c.q_hot = read_number(*p, "q_h", "protocol", c.q_hot);
    c.q_cold = read_number(*p, "q_c", "protocol", c.q_cold);
    c.d_hot = read_number(*p, "D_h", "protocol", c.d_hot);
    c.d_cold = read_number(*p, "D_c", "protocol", c.d_cold);
    if (p->contains("mode")) {
      const auto& mode = p->at("mode");
      if (!mode.is_string()) throw ConfigError("protocol.mode", "expected \"paper\" or \"strict\"");
      const std::string m = mode.get<std::string>();
      if (m == "paper") c.carnot_mode = CarnotMode::kPaper;
      else if (m == "strict") c.carnot_mode = CarnotMode::kStrict;
      else throw ConfigError("protocol.mode", "expected \"paper\" or \"strict\"");
    }
  }
  return c;
}

}  // namespace qmorse
