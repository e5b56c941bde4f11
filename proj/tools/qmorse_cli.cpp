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

// qmorse command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 configuration error, 3 numeric range error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "qmorse/config.hpp"
#include "qmorse/errors.hpp"
#include "qmorse/sweep.hpp"
#include "qmorse/verify.hpp"

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitConfig = 2;
constexpr int kExitRange = 3;

struct Overrides {
  std::optional<double> d_e, alpha, q, t_hot, t_cold, alpha_h, alpha_c, q_h, q_c, d_h, d_c;
};

void add_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--De", o.d_e, "dissociation energy D_e");
  cmd->add_option("--alpha", o.alpha, "well width alpha");
  cmd->add_option("--q", o.q, "deformation q");
  cmd->add_option("--Th", o.t_hot, "hot bath temperature");
  cmd->add_option("--Tc", o.t_cold, "cold bath temperature");
  cmd->add_option("--alpha-h", o.alpha_h, "hot-stroke alpha");
  cmd->add_option("--alpha-c", o.alpha_c, "cold-stroke alpha");
  cmd->add_option("--q-h", o.q_h, "hot-stroke q");
  cmd->add_option("--q-c", o.q_c, "cold-stroke q");
  cmd->add_option("--D-h", o.d_h, "hot-stroke D_e");
  cmd->add_option("--D-c", o.d_c, "cold-stroke D_e");
}

void apply(qmorse::PointConfig& c, const Overrides& o) {
  auto set = [&c](const std::optional<double>& v, const char* name) {
    if (v) qmorse::set_parameter(c, name, *v);
  };
  set(o.d_e, "D_e");
  set(o.alpha, "alpha");
  set(o.q, "q");
  set(o.t_hot, "T_h");
  set(o.t_cold, "T_c");
  set(o.alpha_h, "alpha_h");
  set(o.alpha_c, "alpha_c");
  set(o.q_h, "q_h");
  set(o.q_c, "q_c");
  set(o.d_h, "D_h");
  set(o.d_c, "D_c");
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qmorse::ConfigError(path, "cannot open file");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw qmorse::ConfigError(path, e.what());
  }
}

qmorse::PointConfig load_config(const std::string& path, const Overrides& o) {
  qmorse::PointConfig c = path.empty() ? qmorse::PointConfig{} : qmorse::parse_point_config(read_json(path));
  apply(c, o);
  return c;
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt::format("{:.10g}", *v) : "undefined"; }

void print_table(std::ostream& out, const std::string& title, const qmorse::PointResult& r) {
  out << title << '\n';
  out << fmt::format("{:<14}{:>18}{:>18}\n", "", "sum", "closed");
  auto row = [&](const char* name, auto get) {
    out << fmt::format("{:<14}{:>18}{:>18}\n", name, r.sum ? get(*r.sum) : "-", r.closed ? get(*r.closed) : "-");
  };
  row("Q_h", [](const qmorse::CycleResult& c) { return fmt::format("{:.10g}", c.q_hot); });
  row("Q_c", [](const qmorse::CycleResult& c) { return fmt::format("{:.10g}", c.q_cold); });
  row("W", [](const qmorse::CycleResult& c) { return fmt::format("{:.10g}", c.work); });
  row("eta", [](const qmorse::CycleResult& c) { return fmt_opt(c.efficiency); });
  row("regime", [](const qmorse::CycleResult& c) { return std::string(qmorse::regime_name(c.regime)); });
  row("imag_residue", [](const qmorse::CycleResult& c) { return fmt::format("{:.4g}", c.imag_residue); });
  row("trunc_mass", [](const qmorse::CycleResult& c) { return fmt::format("{:.4g}", c.truncated_mass); });
}

nlohmann::json point_json(const qmorse::PointResult& r) {
  nlohmann::json j;
  if (r.sum) j["sum"] = qmorse::to_json(*r.sum);
  if (r.closed) j["closed"] = qmorse::to_json(*r.closed);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qmorse: Carnot and Otto cycles with a q-deformed Morse working medium"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path;
  int threads = 0;
  std::string format = "csv";
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--threads", threads, "OpenMP threads for sweeps (0 = runtime default)");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));

  std::string config_path;
  Overrides overrides;

  auto* spectrum = app.add_subcommand("spectrum", "bound levels of one model");
  spectrum->add_option("--config", config_path, "JSON config");
  add_overrides(spectrum, overrides);

  std::string mode = "paper";
  auto* carnot = app.add_subcommand("carnot", "single Carnot cycle (sum oracle and closed form)");
  carnot->add_option("--config", config_path, "JSON config");
  carnot->add_option("--mode", mode, "adiabat mode")->check(CLI::IsMember({"paper", "strict"}));
  add_overrides(carnot, overrides);

  std::string protocol = "width";
  auto* otto = app.add_subcommand("otto", "single Otto cycle (sum oracle and closed form)");
  otto->add_option("--protocol", protocol, "driven parameter")->check(CLI::IsMember({"width", "deform", "dissoc"}));
  otto->add_option("--config", config_path, "JSON config");
  add_overrides(otto, overrides);

  std::string grid_path;
  std::string cycle_arg = "carnot";
  std::string method_arg = "both";
  auto* sweep = app.add_subcommand("sweep", "2-D parameter sweep to CSV/JSON");
  sweep->add_option("--grid", grid_path, "JSON grid config")->required();
  sweep->add_option("--cycle", cycle_arg, "carnot | otto-width | otto-deform | otto-dissoc");
  sweep->add_option("--method", method_arg, "sum | closed | both")->check(CLI::IsMember({"sum", "closed", "both"}));

  std::string figure_id;
  std::string figure_method = "sum";
  auto* figure = app.add_subcommand("figure", "figure presets fig1..fig6");
  figure->add_option("id", figure_id, "figure id")->required();
  figure->add_option("--method", figure_method, "sum | closed | both")->check(CLI::IsMember({"sum", "closed", "both"}));

  std::string level = "all";
  auto* verify = app.add_subcommand("verify", "run the oracle suites");
  verify->add_option("--level", level, "specfun | spectrum | thermo | cycles | all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kExitConfig;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  const bool json = format == "json";

  try {
    if (*spectrum) {
      const qmorse::PointConfig c = load_config(config_path, overrides);
      const qmorse::MorseModel m(c.base_params());
      const qmorse::BoundSpectrum s = qmorse::bound_spectrum(m);
      if (json) {
        out << nlohmann::json{{"n_max", s.n_max()}, {"levels", s.levels}, {"lambda", m.lambda()},
                              {"xi", m.xi()}, {"p", m.p()}}.dump(1)
            << '\n';
      } else {
        out << "n,E_n\n";
        for (int n = 0; n <= s.n_max(); ++n) out << n << ',' << fmt::format("{:.12g}", s.levels[n]) << '\n';
      }
    } else if (*carnot || *otto) {
      qmorse::PointConfig c = load_config(config_path, overrides);
      qmorse::CycleKind cycle = qmorse::CycleKind::kCarnot;
      std::string title;
      if (*carnot) {
        if (carnot->count("--mode") > 0) {
          c.carnot_mode = mode == "strict" ? qmorse::CarnotMode::kStrict : qmorse::CarnotMode::kPaper;
        }
        title = fmt::format("Carnot ({} mode), T_h={} T_c={}", c.carnot_mode == qmorse::CarnotMode::kStrict ? "strict" : "paper",
                            c.t_hot, c.t_cold);
      } else {
        cycle = protocol == "width"    ? qmorse::CycleKind::kOttoWidth
                : protocol == "deform" ? qmorse::CycleKind::kOttoDeform
                                       : qmorse::CycleKind::kOttoDissoc;
        title = fmt::format("Otto ({} protocol), T_h={} T_c={}", protocol, c.t_hot, c.t_cold);
      }
      const qmorse::PointResult r = qmorse::run_point(cycle, c, qmorse::Method::kBoth);
      if (json) {
        nlohmann::json j = point_json(r);
        if (cycle == qmorse::CycleKind::kCarnot) j["eta_carnot"] = qmorse::carnot_efficiency(qmorse::carnot_spec(c));
        out << j.dump(1) << '\n';
      } else {
        print_table(out, title, r);
        if (cycle == qmorse::CycleKind::kCarnot) {
          out << fmt::format("eta_carnot = 1 - T_c/T_h = {:.12g}\n", qmorse::carnot_efficiency(qmorse::carnot_spec(c)));
        }
      }
    } else if (*sweep) {
      const qmorse::SweepGrid grid = qmorse::parse_sweep_grid(read_json(grid_path));
      const qmorse::CycleKind cycle = qmorse::parse_cycle(cycle_arg);
      const auto records = qmorse::run_sweep_parallel(grid, cycle, qmorse::parse_method(method_arg), threads);
      json ? qmorse::write_json(out, records) : qmorse::write_csv(out, records);
    } else if (*figure) {
      const qmorse::Method method = qmorse::parse_method(figure_method);
      if (json && qmorse::is_grid_figure(figure_id)) {
        const qmorse::FigurePreset preset = qmorse::figure_preset(figure_id);
        qmorse::write_json(out, qmorse::run_sweep_parallel(preset.grid, preset.cycle, method, threads));
      } else {
        qmorse::write_figure(out, figure_id, method, threads);
      }
    } else if (*verify) {
      const qmorse::VerifyReport report = qmorse::run_verify(qmorse::parse_verify_level(level));
      qmorse::print_report(out, report);
      if (!report.passed()) {
        std::cerr << "verification failed: " << report.first_failure() << '\n';
        return kExitVerify;
      }
    }
  } catch (const qmorse::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const qmorse::RangeError& e) {
    std::cerr << "range error [" << e.parameter() << "]: " << e.what() << '\n';
    return kExitRange;
  } catch (const qmorse::DomainError& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kExitConfig;
  } catch (const qmorse::LevelError& e) {
    std::cerr << "invalid level: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
