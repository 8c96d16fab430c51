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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Optional argv[1] is the path of the atmomin CLI, used for the
// end-to-end determinism check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "atmomin/atmosphere.hpp"
#include "atmomin/error.hpp"
#include "atmomin/min_measure.hpp"
#include "atmomin/sweep.hpp"

using namespace atmomin;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

const std::vector<double> kDhhList{23.03, 40.0, 60.0, 80.0};

Outcome oracle_equivalence() {
  const CutoffPolicy policy{1e-12, 2048};
  double worst = 0.0;
  for (int k = 0; k <= 9; ++k) {
    const SqueezingParam t(0.1 * k);
    const DensityOperator rho = reduced_state(t, choose_cutoff(t, policy));
    for (double x3 : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
      const double d = std::abs(disturbance_numeric(rho, BlochVector::from_polar(x3)) -
                                disturbance_closed_form(t, 1.0, x3));
      worst = std::max(worst, d);
    }
  }
  return {worst < 1e-8, fmt("max |numeric - closed| = %.3e (tol 1e-8)", worst)};
}

Outcome adjudication() {
  std::vector<double> grid;
  for (int k = 0; k <= 9; ++k) grid.push_back(0.1 * k);
  const AdjudicationReport rep = adjudicate(grid, CutoffPolicy{});
  const AdjudicationRecord& r0 = rep.records.front();
  const double ratio = r0.ratio_numeric_over_paper.value_or(NAN);
  const bool ok = std::abs(r0.min_numeric - 0.5) < 1e-10 &&
                  std::abs(r0.paper_final - 0.125) < 1e-12 &&
                  std::abs(ratio - 4.0) < 1e-6 &&
                  rep.oracle_consistent_form == "closed_x3_1";
  return {ok, fmt("t=0 oracle %.12f", r0.min_numeric) +
                  fmt(", printed form %.12f", r0.paper_final) +
                  fmt(", ratio %.9f", ratio) + ", verdict " +
                  rep.oracle_consistent_form +
                  fmt(" (closed dev %.2e)", rep.closed_x3_1_max_abs_dev)};
}

Outcome atmosphere_geometry() {
  const double p0 = peak_radius(23.03);
  bool ok = std::abs(p0 - 1.43) <= 0.01;
  std::string detail = fmt("peak(23.03) = %.6f; peaks", p0);
  for (double d : kDhhList) {
    const double p = peak_radius(d);
    ok = ok && p >= 1.42 && p <= 1.52;
    detail += fmt(" %.5f", p);
  }
  return {ok, detail + " (band [1.42, 1.52])"};
}

Outcome composition_invariant() {
  SweepSpec spec;  // 4 x 401 points over x in [1.001, 10]
  const std::vector<SweepRow> rows = sweep_rows(spec);
  const int per = spec.x_axis.count();
  bool ok = rows.size() == kDhhList.size() * static_cast<std::size_t>(per);
  double worst = 0.0;
  for (std::size_t p = 0; p < spec.d_hh_list.size() && ok; ++p) {
    const double d = spec.d_hh_list[p];
    int lo = 0;
    int hi = 0;
    for (int i = 0; i < per; ++i) {
      const SweepRow& row = rows[p * per + static_cast<std::size_t>(i)];
      if (!row.min_closed.has_value()) return {false, "masked min_closed cell"};
      const double v = row.min_closed.value();
      if (v < rows[p * per + static_cast<std::size_t>(lo)].min_closed.value()) lo = i;
      if (v > rows[p * per + static_cast<std::size_t>(hi)].min_closed.value()) hi = i;
    }
    ok = ok && hi == 0;
    const double a = spec.x_axis.at(std::max(0, lo - 1));
    const double b = spec.x_axis.at(std::min(per - 1, lo + 1));
    const double refined =
        argmin_min_closed(d, spec.r_h, spec.omega, spec.eta, spec.convention, a, b);
    worst = std::max(worst, std::abs(refined - peak_radius(d)));
  }
  ok = ok && worst < 1e-6;
  return {ok, fmt("max |argmin - peak_radius| = %.3e (tol 1e-6); maximum at smallest x", worst)};
}

Outcome temperature_limits() {
  const double at_horizon = local_temperature({1.0, 1.0, 23.03}).value;
  const double far = temperature_ratio(1e6, 23.03);
  const bool ok = at_horizon == 0.0 && std::abs(far - 1.0) < 1e-5;
  return {ok, fmt("T_HH(r_H) = %g", at_horizon) +
                  fmt(", |tau(1e6) - 1| = %.3e (tol 1e-5)", std::abs(far - 1.0))};
}

Outcome inversion_round_trip() {
  std::mt19937_64 gen(6);
  std::uniform_real_distribution<double> ux(1.01, 10.0);
  std::uniform_real_distribution<double> ud(5.0, 100.0);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x = ux(gen);
    const double d = ud(gen);
    const double r_h = 1.0;
    const double tau =
        local_temperature({x * r_h, r_h, d}).value / hawking_temperature(r_h).value;
    worst = std::max(worst, std::abs(dhh_from_observables(x, tau) - d));
  }
  return {worst < 1e-10, fmt("max |D - D'| over 50 pairs = %.3e (tol 1e-10)", worst)};
}

Outcome monotonicity() {
  SweepSpec spec;
  spec.mode = SweepMode::Temperature;
  const std::vector<SweepRow> rows = sweep_rows(spec);
  bool tau_ok = rows.size() == 100;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    tau_ok = tau_ok && rows[i].min_closed.value() < rows[i - 1].min_closed.value();
  }
  bool d_ok = true;
  double prev = INFINITY;
  std::string values;
  for (double d : kDhhList) {
    const double v =
        min_at_point({2.0 * kUnitHawkingRadius, kUnitHawkingRadius, d}, {})
            .min_closed.value();
    d_ok = d_ok && v < prev;
    prev = v;
    values += fmt(" %.4e", v);
  }
  return {tau_ok && d_ok,
          std::string("tau grid (100 pts) ") + (tau_ok ? "strictly decreasing" : "NOT decreasing") +
              "; MIN at x=2 across D:" + values};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism(const char* cli) {
  SweepSpec spec;
  spec.threads = 1;
  const std::string one = run_sweep(spec);
  spec.threads = 8;
  const std::string eight = run_sweep(spec);
  bool ok = one == eight;
  std::string detail = std::string("in-process ") + (ok ? "identical" : "DIFFERENT");
  if (cli != nullptr) {
    const auto dir = std::filesystem::temp_directory_path() / "atmomin_acceptance";
    std::filesystem::create_directories(dir);
    const auto a = dir / "threads1.csv";
    const auto b = dir / "threads8.csv";
    const std::string base = std::string("\"") + cli + "\" sweep-r";
    const int ra = std::system((base + " --threads 1 --out \"" + a.string() + "\"").c_str());
    const int rb = std::system((base + " --threads 8 --out \"" + b.string() + "\"").c_str());
    const std::string ca = slurp(a);
    const bool cli_ok = ra == 0 && rb == 0 && !ca.empty() && ca == slurp(b) && ca == one;
    ok = ok && cli_ok;
    detail += std::string(", CLI sweep-r --threads 1 vs 8 ") +
              (cli_ok ? "byte-identical" : "DIFFERENT") + fmt(" (%.0f bytes)", static_cast<double>(ca.size()));
  }
  return {ok, detail};
}

Outcome critical_diagnostic() {
  const CriticalConstantResult r = critical_constant();
  const bool ok = std::isfinite(r.d_c) && r.tangency_residual < 1e-5;
  return {ok, fmt("D_C = %.6f", r.d_c) + fmt(" at x = %.6f", r.tangency_x) +
                  fmt(", tangency residual %.3e (tol 1e-5)", r.tangency_residual) +
                  fmt("; deviation from 23.03 = %+.4f (not reproducible as published)",
                      r.d_c - kReferenceCriticalConstant)};
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"oracle-equivalence", 30.0, oracle_equivalence},
      {"adjudication", 0.0, adjudication},
      {"atmosphere-geometry", 1.0, atmosphere_geometry},
      {"composition-invariant", 5.0, composition_invariant},
      {"temperature-limits", 0.0, temperature_limits},
      {"inversion-round-trip", 0.0, inversion_round_trip},
      {"monotonicity", 0.0, monotonicity},
      {"determinism", 0.0, [cli] { return determinism(cli); }},
      {"critical-constant-diagnostic", 0.0, critical_diagnostic},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0.0 && secs > c.budget_s) {
      out.pass = false;
      out.detail += fmt("; over the %.0f s budget", c.budget_s);
    }
    if (!out.pass) ++failures;
    std::printf("[%s] %d %s: %s [%.3f s]\n", out.pass ? "PASS" : "FAIL", index, c.name,
                out.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
