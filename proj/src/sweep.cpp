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

#include "atmomin/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "atmomin/error.hpp"
#include "atmomin/search.hpp"

namespace atmomin {
namespace {

void fill_from_ratio(SweepRow& row, double tau, double r_h, double omega,
                     const PointOptions& options) {
  const double temperature = tau * hawking_temperature(r_h).value;
  const SqueezingParam t =
      squeezing_from_temperature(temperature, {omega, options.convention});
  row.t_hh_over_th = tau;
  row.t_param = t.value();
  row.min_closed = disturbance_closed_form(t, options.eta, 1.0);
  row.min_paper_final = min_paper_final(t, options.eta);
  try {
    const long n = choose_cutoff(t, options.policy);
    row.cutoff_used = n;
    if (options.numeric) {
      MinOptions mo;
      mo.eta = options.eta;
      row.min_numeric = min_numeric(reduced_state(t, n), t, mo).value_numeric;
    } else {
      row.min_numeric = MaskReason::NotRequested;
    }
  } catch (const TruncationError&) {
    row.cutoff_used = MaskReason::CutoffOverflow;
    row.min_numeric = options.numeric ? MaskReason::CutoffOverflow
                                      : MaskReason::NotRequested;
  }
}

void mask_thermal(SweepRow& row, MaskReason reason) {
  row.t_hh_over_th = reason;
  row.t_param = reason;
  row.min_closed = reason;
  row.min_paper_final = reason;
  row.min_numeric = reason;
  row.cutoff_used = reason;
}

// `x` is passed separately so sweep rows carry the exact axis value.
SweepRow evaluate_radial(double x, double r, double r_h, double d_hh,
                         double omega, const PointOptions& options) {
  SweepRow row;
  row.d_hh = d_hh;
  row.x = x;
  row.r = r;
  row.r_h = r_h;
  double tau = 0.0;
  try {
    tau = temperature_ratio(x, d_hh);
  } catch (const SubcriticalError&) {
    mask_thermal(row, MaskReason::SubcriticalD);
    return row;
  }
  fill_from_ratio(row, tau, r_h, omega, options);
  return row;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ContractViolation(what);
}

void validate_axis(const Axis& a, const std::string& name) {
  require(a.steps >= 1, name + ": steps must be >= 1");
  require(std::isfinite(a.min) && std::isfinite(a.max),
          name + ": bounds must be finite");
  require(a.min < a.max, name + ": min must be < max");
}

struct Task {
  double x = 0.0;
  double r_h = 0.0;
  double d_hh = 0.0;
  double tau = 0.0;
  bool numeric = false;
};

}  // namespace

const char* to_string(MaskReason reason) noexcept {
  switch (reason) {
    case MaskReason::SubcriticalD: return "subcritical-D";
    case MaskReason::CutoffOverflow: return "cutoff-overflow";
    case MaskReason::NotRequested: return "not-requested";
    case MaskReason::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

const char* to_string(SweepMode mode) noexcept {
  switch (mode) {
    case SweepMode::Radius: return "sweep-r";
    case SweepMode::Temperature: return "sweep-tau";
    case SweepMode::Grid: return "grid";
    case SweepMode::Adjudicate: return "adjudicate";
  }
  return "unknown";
}

SweepRow min_at_point(const AtmospherePoint& p, const PointOptions& options) {
  p.validate();
  const double x = p.r == p.r_h ? 1.0 : p.ratio();
  return evaluate_radial(x, p.r, p.r_h, p.d_hh, p.omega, options);
}

SweepRow min_at_temperature_ratio(double tau, double r_h, double omega,
                                  const PointOptions& options) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw DomainError("T_HH/T_H must be >= 0, got " + std::to_string(tau));
  }
  SweepRow row;
  row.r_h = r_h;
  fill_from_ratio(row, tau, r_h, omega, options);
  return row;
}

double min_closed_at_ratio(double x, double d_hh, double r_h, double omega,
                           double eta, ExponentConvention convention) {
  const double temperature =
      temperature_ratio(x, d_hh) * hawking_temperature(r_h).value;
  const SqueezingParam t =
      squeezing_from_temperature(temperature, {omega, convention});
  return disturbance_closed_form(t, eta, 1.0);
}

double argmin_min_closed(double d_hh, double r_h, double omega, double eta,
                         ExponentConvention convention, double lo, double hi) {
  const auto f = [&](double x) {
    return min_closed_at_ratio(x, d_hh, r_h, omega, eta, convention);
  };
  return search::golden_minimize(f, lo, hi, 1e-12).x;
}

double Axis::at(int i) const noexcept {
  if (i == steps) return max;
  return min + (max - min) * static_cast<double>(i) / steps;
}

void SweepSpec::validate() const {
  require(std::isfinite(omega) && omega > 0.0, "omega must be > 0");
  require(eta >= 0.0 && eta <= 1.0, "eta must lie in [0, 1]");
  require(epsilon_tail > 0.0 && epsilon_tail < 1.0,
          "eps-tail must lie in (0, 1)");
  require(cutoff_cap >= 0, "cutoff cap must be >= 0");
  require(verify_every >= 0, "verify interval must be >= 0");
  require(std::isfinite(r_h) && r_h > 0.0, "r_h must be > 0");
  switch (mode) {
    case SweepMode::Radius:
    case SweepMode::Grid:
      validate_axis(x_axis, "x axis");
      require(x_axis.min > 1.0, "x axis must start above 1 (r > r_H)");
      require(!d_hh_list.empty(), "D_HH list must not be empty");
      for (double d : d_hh_list) require(std::isfinite(d), "D_HH must be finite");
      if (mode == SweepMode::Grid) {
        validate_axis(rh_axis, "r_h axis");
        require(rh_axis.min > 0.0, "r_h axis must be positive");
      }
      break;
    case SweepMode::Temperature:
      validate_axis(tau_axis, "tau axis");
      require(tau_axis.min >= 0.0, "tau axis must be >= 0");
      break;
    case SweepMode::Adjudicate:
      throw ContractViolation("adjudicate produces a report, not a sweep");
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ATMOMIN_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<SweepRow> sweep_rows(const SweepSpec& spec) {
  spec.validate();

  std::vector<double> d_list = spec.d_hh_list;
  std::stable_sort(d_list.begin(), d_list.end());

  std::vector<Task> tasks;
  switch (spec.mode) {
    case SweepMode::Radius:
      for (double d : d_list) {
        for (int i = 0; i < spec.x_axis.count(); ++i) {
          tasks.push_back({spec.x_axis.at(i), spec.r_h, d, 0.0, false});
        }
      }
      break;
    case SweepMode::Grid:
      for (double d : d_list) {
        for (int j = 0; j < spec.rh_axis.count(); ++j) {
          for (int i = 0; i < spec.x_axis.count(); ++i) {
            tasks.push_back({spec.x_axis.at(i), spec.rh_axis.at(j), d, 0.0, false});
          }
        }
      }
      break;
    case SweepMode::Temperature:
      for (int i = 0; i < spec.tau_axis.count(); ++i) {
        tasks.push_back({0.0, spec.r_h, 0.0, spec.tau_axis.at(i), false});
      }
      break;
    case SweepMode::Adjudicate:
      break;
  }
  if (spec.verify_every > 0) {
    for (std::size_t i = 0; i < tasks.size();
         i += static_cast<std::size_t>(spec.verify_every)) {
      tasks[i].numeric = true;
    }
  }

  PointOptions base;
  base.eta = spec.eta;
  base.convention = spec.convention;
  base.policy = {spec.epsilon_tail, spec.cutoff_cap};

  const auto evaluate = [&](const Task& task) {
    PointOptions options = base;
    options.numeric = task.numeric;
    if (spec.mode == SweepMode::Temperature) {
      return min_at_temperature_ratio(task.tau, task.r_h, spec.omega, options);
    }
    return evaluate_radial(task.x, task.x * task.r_h, task.r_h, task.d_hh,
                           spec.omega, options);
  };

  std::vector<SweepRow> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < tasks.size();
         i = next.fetch_add(1)) {
      try {
        rows[i] = evaluate(tasks[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const unsigned threads = std::min<std::size_t>(
      resolve_threads(spec.threads), std::max<std::size_t>(tasks.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string run_sweep(const SweepSpec& spec) {
  const std::vector<SweepRow> rows = sweep_rows(spec);
  return format_csv(spec, rows);
}

AdjudicationReport adjudicate(std::span<const double> t_grid,
                              const CutoffPolicy& policy,
                              const MinOptions& options) {
  if (t_grid.empty()) throw ContractViolation("adjudication grid is empty");
  AdjudicationReport report;
  for (double tv : t_grid) {
    const SqueezingParam t(tv);
    const MinReport m = min_numeric(t, policy, options);
    AdjudicationRecord rec{};
    rec.t = tv;
    rec.cutoff = m.cutoff_used;
    rec.min_numeric = m.value_numeric;
    rec.closed_x3_1 = m.value_closed_x3_1;
    rec.paper_final = m.value_paper_final;
    if (m.value_paper_final != 0.0) {
      rec.ratio_numeric_over_paper = m.value_numeric / m.value_paper_final;
    }
    rec.argmax_x3 = m.argmax.x3();
    rec.flat = m.flat;
    report.closed_x3_1_max_abs_dev = std::max(
        report.closed_x3_1_max_abs_dev, std::abs(rec.min_numeric - rec.closed_x3_1));
    report.paper_final_max_abs_dev = std::max(
        report.paper_final_max_abs_dev, std::abs(rec.min_numeric - rec.paper_final));
    report.records.push_back(rec);
  }
  const bool closed_ok = report.closed_x3_1_max_abs_dev < report.tolerance;
  const bool paper_ok = report.paper_final_max_abs_dev < report.tolerance;
  if (closed_ok && paper_ok) {
    report.oracle_consistent_form = "both";
  } else if (closed_ok) {
    report.oracle_consistent_form = "closed_x3_1";
  } else if (paper_ok) {
    report.oracle_consistent_form = "paper_final";
  } else {
    report.oracle_consistent_form = "none";
  }
  return report;
}

}  // namespace atmomin
