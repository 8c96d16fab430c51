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

// Hartle-Hawking local temperature around a Schwarzschild horizon.
//
// Internally everything is expressed in the ratio x = r / r_H; absolute
// lengths only appear in AtmospherePoint. Units are Planck units throughout.

namespace atmomin {

struct Temperature {
  double value = 0.0;
};

/// Throws DomainError unless r_h > 0, r >= r_h and omega > 0 (all finite).
struct AtmospherePoint {
  double r;
  double r_h;
  double d_hh;
  double omega = 1.0;

  void validate() const;
  double ratio() const noexcept { return r / r_h; }
};

/// Temperature-positivity threshold quoted alongside the peak radius.
inline constexpr double kReferenceCriticalConstant = 23.03;

/// T_H = 1 / (4 pi r_h).
Temperature hawking_temperature(double r_h);

/// 1 + 2/x + (9 + 4D - 36 ln x) / x^2, the second factor under the root.
double hh_radicand(double x, double d_hh) noexcept;

/// tau = T_HH / T_H at ratio x >= 1. Exactly 0 at x = 1.
/// Throws SubcriticalError on a negative radicand, DomainError on x < 1.
double temperature_ratio(double x, double d_hh);

/// tau^2 and its x-derivative (used by the peak search).
double temperature_ratio_sq(double x, double d_hh) noexcept;
double temperature_ratio_sq_derivative(double x, double d_hh) noexcept;

Temperature local_temperature(const AtmospherePoint& p);

/// Inverts the profile for D given x > 1 and tau >= 0.
/// Throws DomainError (pole) for x <= 1.
double dhh_from_observables(double x, double tau);

/// argmax over x in (1, 100] of T_HH, to |dx| < 1e-8.
double peak_radius(double d_hh);

struct CriticalConstantResult {
  double d_c;
  double tangency_x;          // argmin of the radicand at d_c
  double tangency_residual;   // |min radicand| at d_c
  double lower;
  double upper;
};

/// Smallest D with min_{x in (1, 100]} hh_radicand(x, D) >= 0, by bisection
/// on D (tolerance 1e-6) over a golden-section inner minimum.
/// Throws SearchError if [lower, upper] does not bracket the sign change.
CriticalConstantResult critical_constant(double lower = 0.0,
                                         double upper = 100.0);

/// Inner minimum used by `critical_constant`.
struct RadicandMinimum {
  double x;
  double value;
};
RadicandMinimum radicand_minimum(double d_hh);

}  // namespace atmomin
