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

#pragma once

// Composition of the temperature profile with the MIN pipeline, parameter
// sweeps, and the adjudication / critical-constant reports.
//
// Sweep output is deterministic: points are evaluated independently (in
// parallel when threads > 1) and emitted in index order, so the bytes do not
// depend on scheduling.

#include <array>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atmomin/atmosphere.hpp"
#include "atmomin/kruskal_states.hpp"
#include "atmomin/min_measure.hpp"

namespace atmomin {

enum class MaskReason {
  SubcriticalD,
  CutoffOverflow,
  NotRequested,
  NotApplicable,
};

const char* to_string(MaskReason reason) noexcept;

/// A value or the reason it is absent.
template <class T>
class Masked {
 public:
  Masked(T value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Masked(MaskReason reason) : reason_(reason) {}  // NOLINT

  bool has_value() const noexcept { return value_.has_value(); }
  const T& value() const { return value_.value(); }
  MaskReason reason() const noexcept { return reason_; }

 private:
  std::optional<T> value_;
  MaskReason reason_ = MaskReason::NotApplicable;
};

struct SweepRow {
  Masked<double> d_hh = MaskReason::NotApplicable;
  Masked<double> x = MaskReason::NotApplicable;
  Masked<double> r = MaskReason::NotApplicable;
  double r_h = 0.0;
  Masked<double> t_hh_over_th = MaskReason::NotApplicable;
  Masked<double> t_param = MaskReason::NotApplicable;
  Masked<double> min_closed = MaskReason::NotApplicable;
  Masked<double> min_paper_final = MaskReason::NotApplicable;
  Masked<double> min_numeric = MaskReason::NotRequested;
  Masked<long> cutoff_used = MaskReason::NotApplicable;
};

inline constexpr std::array<std::string_view, 10> kSweepColumns = {
    "d_hh",    "x",           "r",               "r_h",         "t_hh_over_th",
    "t_param", "min_closed", "min_paper_final", "min_numeric", "cutoff_used"};

/// r_h with T_H = 1, the default horizon for sweeps.
inline constexpr double kUnitHawkingRadius = 1.0 / (4.0 * std::numbers::pi);

struct PointOptions {
  double eta = 1.0;
  ExponentConvention convention = ExponentConvention::HalfExponent;
  CutoffPolicy policy{};
  bool numeric = false;
};

/// MIN at an atmosphere point. Subcritical radicands and cutoff overflow are
/// returned as masked cells; other precondition failures throw.
SweepRow min_at_point(const AtmospherePoint& p, const PointOptions& options);

/// Same pipeline fed by tau = T_HH/T_H directly (T = tau * T_H(r_h)).
SweepRow min_at_temperature_ratio(double tau, double r_h, double omega,
                                  const PointOptions& options);

/// Closed-form MIN (x3 = 1) as a function of x, for the argmin refinement.
double min_closed_at_ratio(double x, double d_hh, double r_h, double omega,
                           double eta, ExponentConvention convention);

/// Golden-section argmin over x in [lo, hi] of min_closed_at_ratio.
double argmin_min_closed(double d_hh, double r_h, double omega, double eta,
                         ExponentConvention convention, double lo, double hi);

enum class SweepMode { Radius, Temperature, Grid, Adjudicate };

const char* to_string(SweepMode mode) noexcept;

/// Linearly spaced axis with steps + 1 points.
struct Axis {
  double min;
  double max;
  int steps;

  int count() const noexcept { return steps + 1; }
  double at(int i) const noexcept;
};

struct SweepSpec {
  SweepMode mode = SweepMode::Radius;
  Axis x_axis{1.001, 10.0, 400};
  Axis rh_axis{0.05, 1.0, 100};
  Axis tau_axis{0.0, 5.0, 99};
  double r_h = kUnitHawkingRadius;
  std::vector<double> d_hh_list{23.03, 40.0, 60.0, 80.0};
  double omega = 1.0;
  double eta = 1.0;
  ExponentConvention convention = ExponentConvention::HalfExponent;
  double epsilon_tail = 1e-12;
  long cutoff_cap = 2048;
  int verify_every = 0;  // 0: oracle off; k: oracle on every k-th row
  unsigned threads = 0;  // 0: ATMOMIN_THREADS or hardware concurrency

  /// Throws ContractViolation on invalid ranges.
  void validate() const;
};

/// Thread count actually used for `requested` (0 = environment default).
unsigned resolve_threads(unsigned requested);

std::vector<SweepRow> sweep_rows(const SweepSpec& spec);

std::string format_csv(const SweepSpec& spec, std::span<const SweepRow> rows);

/// sweep_rows + format_csv.
std::string run_sweep(const SweepSpec& spec);

/// Writes `content` to `path`; throws IoError on failure.
void write_output(const std::string& path, std::string_view content);

/// Shortest round-trip decimal form.
std::string format_double(double v);

struct AdjudicationRecord {
  double t;
  long cutoff;
  double min_numeric;
  double closed_x3_1;
  double paper_final;
  std::optional<double> ratio_numeric_over_paper;
  double argmax_x3;
  bool flat;
};

struct AdjudicationReport {
  std::vector<AdjudicationRecord> records;
  double tolerance = 1e-6;
  double closed_x3_1_max_abs_dev = 0.0;
  double paper_final_max_abs_dev = 0.0;
  /// "closed_x3_1", "paper_final", "both" or "none".
  std::string oracle_consistent_form;
};

/// Runs the dense oracle at every t and compares both closed forms.
AdjudicationReport adjudicate(std::span<const double> t_grid,
                              const CutoffPolicy& policy,
                              const MinOptions& options = {});

std::string to_json(const AdjudicationReport& report,
                    const CutoffPolicy& policy, double eta);
std::string to_json(const CriticalConstantResult& result);

}  // namespace atmomin
