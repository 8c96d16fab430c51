// Copyright 2026 the atmomin authors
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

// atmomin: command-line front end for the MIN / quantum-atmosphere library.
//
// Exit codes: 0 ok, 2 invalid arguments, 3 domain error, 4 cutoff overflow,
// 5 I/O failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "atmomin/atmosphere.hpp"
#include "atmomin/error.hpp"
#include "atmomin/kruskal_states.hpp"
#include "atmomin/min_measure.hpp"
#include "atmomin/sweep.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace atmomin;

enum ExitCode {
  kOk = 0,
  kInvalidArguments = 2,
  kDomain = 3,
  kCutoffOverflow = 4,
  kIo = 5,
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Contract: return kInvalidArguments;
    case ErrorKind::Domain:
    case ErrorKind::Subcritical:
    case ErrorKind::Search: return kDomain;
    case ErrorKind::Truncation:
    case ErrorKind::Sizing: return kCutoffOverflow;
    case ErrorKind::Io: return kIo;
  }
  return kInvalidArguments;
}

struct Common {
  double omega = 1.0;
  double eta = 1.0;
  std::string convention = "half";
  double eps_tail = 1e-12;
  long cutoff_cap = 2048;
  std::string out;
  int verify = 0;
  unsigned threads = 0;

  ExponentConvention exponent() const {
    return convention == "full" ? ExponentConvention::FullExponent
                                : ExponentConvention::HalfExponent;
  }
  CutoffPolicy policy() const { return {eps_tail, cutoff_cap}; }
};

void emit(const Common& common, const std::string& text) {
  if (common.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
  } else {
    write_output(common.out, text);
  }
}

Json min_report_json(const MinReport& m, double t, const Common& c) {
  Json j;
  j["tool"] = "atmomin";
  j["version"] = ATMOMIN_VERSION;
  j["report"] = "min";
  j["convention"] = to_string(c.exponent());
  j["omega"] = c.omega;
  j["eta"] = c.eta;
  j["eta_status"] = c.eta == 1.0 ? "validated" : "unvalidated-eta";
  j["eps_tail"] = c.eps_tail;
  j["t"] = t;
  j["value_numeric"] = m.value_numeric;
  j["argmax"] = {m.argmax.x1(), m.argmax.x2(), m.argmax.x3()};
  j["value_closed_x3_1"] = m.value_closed_x3_1;
  j["value_paper_final"] = m.value_paper_final;
  j["value_x3_0"] = m.value_x3_0;
  j["cutoff_used"] = m.cutoff_used;
  j["max_abs_residual"] = m.max_abs_residual;
  j["flat"] = m.flat;
  return j;
}

void add_common(CLI::App& app, Common& c) {
  app.add_option("--omega", c.omega, "Mode frequency (1/l_p)")
      ->capture_default_str();
  app.add_option("--eta", c.eta, "Entanglement parameter in [0, 1]")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  app.add_option("--convention", c.convention, "t(T) convention")
      ->check(CLI::IsMember({"half", "full"}))
      ->capture_default_str();
  app.add_option("--eps-tail", c.eps_tail, "Fock truncation tail bound")
      ->capture_default_str();
  app.add_option("--cutoff-cap", c.cutoff_cap, "Largest allowed Fock cutoff")
      ->capture_default_str();
  app.add_option("--out", c.out, "Output file (default: standard output)");
  app.add_option("--verify", c.verify,
                 "Run the dense oracle on every K-th sweep point (bare flag: K = 50)")
      ->expected(0, 1)
      ->default_str("50")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--threads", c.threads,
                 "Worker threads (default: ATMOMIN_THREADS or all cores)")
      ->envname("ATMOMIN_THREADS");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MIN of a bosonic Bell state in the black-hole quantum atmosphere"};
  app.require_subcommand(1);
  Common common;
  add_common(app, common);
  app.fallthrough();

  // temp
  double temp_r = 0.0;
  double temp_rh = 0.0;
  double temp_dhh = 0.0;
  auto* temp = app.add_subcommand("temp", "Hartle-Hawking temperature at a point");
  temp->add_option("--r", temp_r, "Radius")->required();
  temp->add_option("--rh", temp_rh, "Horizon radius")->required();
  temp->add_option("--dhh", temp_dhh, "Hartle-Hawking constant")->required();

  // dhh
  double inv_x = 0.0;
  double inv_tau = 0.0;
  auto* dhh = app.add_subcommand("dhh", "Recover D_HH from r/r_H and T_HH/T_H");
  dhh->add_option("--x", inv_x, "r/r_H")->required();
  dhh->add_option("--tau", inv_tau, "T_HH/T_H")->required();

  // min
  std::optional<double> min_t;
  std::optional<double> min_tau;
  std::optional<double> min_x;
  std::optional<double> min_dhh;
  double min_rh = kUnitHawkingRadius;
  int min_grid = 201;
  auto* min = app.add_subcommand("min", "MIN at a single point with the dense oracle");
  auto* opt_t = min->add_option("--t", min_t, "Squeezing parameter");
  auto* opt_tau = min->add_option("--tau", min_tau, "T_HH/T_H");
  auto* opt_x = min->add_option("--x", min_x, "r/r_H");
  auto* opt_dhh = min->add_option("--dhh", min_dhh, "Hartle-Hawking constant");
  min->add_option("--rh", min_rh, "Horizon radius")->capture_default_str();
  min->add_option("--grid", min_grid, "Coarse x3 grid points")->capture_default_str();
  opt_t->excludes(opt_tau)->excludes(opt_x)->excludes(opt_dhh);
  opt_tau->excludes(opt_x)->excludes(opt_dhh);
  opt_x->needs(opt_dhh);
  opt_dhh->needs(opt_x);

  // sweep-r
  SweepSpec radius;
  radius.mode = SweepMode::Radius;
  auto* sweep_r = app.add_subcommand("sweep-r", "MIN against r/r_H per D_HH");
  sweep_r->add_option("--x-min", radius.x_axis.min)->capture_default_str();
  sweep_r->add_option("--x-max", radius.x_axis.max)->capture_default_str();
  sweep_r->add_option("--steps", radius.x_axis.steps)->capture_default_str();
  sweep_r->add_option("--rh", radius.r_h, "Horizon radius (default: T_H = 1)");
  sweep_r->add_option("--dhh", radius.d_hh_list, "D_HH values")
      ->delimiter(',')
      ->capture_default_str();

  // sweep-tau
  SweepSpec temperature;
  temperature.mode = SweepMode::Temperature;
  auto* sweep_tau = app.add_subcommand("sweep-tau", "MIN against T_HH/T_H");
  sweep_tau->add_option("--tau-min", temperature.tau_axis.min)->capture_default_str();
  sweep_tau->add_option("--tau-max", temperature.tau_axis.max)->capture_default_str();
  sweep_tau->add_option("--steps", temperature.tau_axis.steps)->capture_default_str();
  sweep_tau->add_option("--rh", temperature.r_h, "Horizon radius (default: T_H = 1)");

  // grid
  SweepSpec grid;
  grid.mode = SweepMode::Grid;
  grid.x_axis = {1.01, 5.0, 100};
  auto* grid_cmd = app.add_subcommand("grid", "MIN on the (r, r_H) plane per D_HH");
  grid_cmd->add_option("--x-min", grid.x_axis.min)->capture_default_str();
  grid_cmd->add_option("--x-max", grid.x_axis.max)->capture_default_str();
  grid_cmd->add_option("--x-steps", grid.x_axis.steps)->capture_default_str();
  grid_cmd->add_option("--rh-min", grid.rh_axis.min)->capture_default_str();
  grid_cmd->add_option("--rh-max", grid.rh_axis.max)->capture_default_str();
  grid_cmd->add_option("--rh-steps", grid.rh_axis.steps)->capture_default_str();
  grid_cmd->add_option("--dhh", grid.d_hh_list, "D_HH values")
      ->delimiter(',')
      ->capture_default_str();

  // adjudicate
  std::vector<double> t_grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  int adj_grid = 201;
  auto* adj = app.add_subcommand("adjudicate",
                                 "Compare the dense oracle with both closed forms");
  adj->add_option("--t-grid", t_grid, "Squeezing parameters")
      ->delimiter(',')
      ->capture_default_str();
  adj->add_option("--grid", adj_grid, "Coarse x3 grid points")->capture_default_str();

  // critical
  double crit_lo = 0.0;
  double crit_hi = 100.0;
  auto* crit = app.add_subcommand("critical",
                                  "Smallest D_HH with a non-negative radicand");
  crit->add_option("--lower", crit_lo)->capture_default_str();
  crit->add_option("--upper", crit_hi)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalidArguments;
  }

  try {
    const auto apply_common = [&common](SweepSpec& spec) {
      spec.omega = common.omega;
      spec.eta = common.eta;
      spec.convention = common.exponent();
      spec.epsilon_tail = common.eps_tail;
      spec.cutoff_cap = common.cutoff_cap;
      spec.verify_every = common.verify;
      spec.threads = common.threads;
    };

    if (temp->parsed()) {
      const AtmospherePoint p{temp_r, temp_rh, temp_dhh, common.omega};
      const double th = hawking_temperature(temp_rh).value;
      const double thh = local_temperature(p).value;
      Json j;
      j["r"] = temp_r;
      j["r_h"] = temp_rh;
      j["d_hh"] = temp_dhh;
      j["x"] = temp_r / temp_rh;
      j["t_h"] = th;
      j["t_hh"] = thh;
      j["tau"] = thh / th;
      emit(common, j.dump(2) + "\n");
    } else if (dhh->parsed()) {
      Json j;
      j["x"] = inv_x;
      j["tau"] = inv_tau;
      j["d_hh"] = dhh_from_observables(inv_x, inv_tau);
      emit(common, j.dump(2) + "\n");
    } else if (min->parsed()) {
      double tau = 0.0;
      Json where;
      if (min_t) {
        where["t"] = *min_t;
      } else if (min_tau) {
        tau = *min_tau;
        where["tau"] = tau;
        where["r_h"] = min_rh;
      } else if (min_x) {
        tau = temperature_ratio(*min_x, *min_dhh);
        where["x"] = *min_x;
        where["d_hh"] = *min_dhh;
        where["r_h"] = min_rh;
        where["tau"] = tau;
      } else {
        throw ContractViolation("min needs --t, --tau, or --x with --dhh");
      }
      const SqueezingParam t =
          min_t ? SqueezingParam(*min_t)
                : squeezing_from_temperature(
                      tau * hawking_temperature(min_rh).value,
                      {common.omega, common.exponent()});
      MinOptions mo;
      mo.eta = common.eta;
      mo.grid_points = min_grid;
      Json j = min_report_json(min_numeric(t, common.policy(), mo), t.value(), common);
      j["input"] = std::move(where);
      emit(common, j.dump(2) + "\n");
    } else if (sweep_r->parsed()) {
      apply_common(radius);
      emit(common, run_sweep(radius));
    } else if (sweep_tau->parsed()) {
      apply_common(temperature);
      emit(common, run_sweep(temperature));
    } else if (grid_cmd->parsed()) {
      apply_common(grid);
      emit(common, run_sweep(grid));
    } else if (adj->parsed()) {
      MinOptions mo;
      mo.eta = common.eta;
      mo.grid_points = adj_grid;
      const AdjudicationReport report = adjudicate(t_grid, common.policy(), mo);
      emit(common, to_json(report, common.policy(), common.eta));
    } else if (crit->parsed()) {
      emit(common, to_json(critical_constant(crit_lo, crit_hi)));
    }
  } catch (const Error& e) {
    std::cerr << "atmomin: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "atmomin: " << e.what() << "\n";
    return kInvalidArguments;
  }
  return kOk;
}
