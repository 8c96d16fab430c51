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

#include "atmomin/atmosphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "atmomin/error.hpp"
#include "atmomin/search.hpp"

namespace atmomin {
namespace {

constexpr double kSearchMaxRatio = 100.0;
constexpr int kScanPoints = 4000;

// Log-spaced scan of x = 1 + u, u in [1e-9, kSearchMaxRatio - 1].
std::vector<double> scan_ratios() {
  std::vector<double> xs(kScanPoints);
  const double lu0 = std::log(1e-9);
  const double lu1 = std::log(kSearchMaxRatio - 1.0);
  for (int i = 0; i < kScanPoints; ++i) {
    const double u = std::exp(lu0 + (lu1 - lu0) * i / (kScanPoints - 1));
    xs[static_cast<std::size_t>(i)] = 1.0 + u;
  }
  xs.back() = kSearchMaxRatio;
  return xs;
}

const std::vector<double>& scan_grid() {
  static const std::vector<double> grid = scan_ratios();
  return grid;
}

}  // namespace

void AtmospherePoint::validate() const {
  if (!(r_h > 0.0) || !std::isfinite(r_h)) {
    throw DomainError("horizon radius must be positive and finite");
  }
  if (!std::isfinite(r) || r < r_h) {
    throw DomainError("radius " + std::to_string(r) +
                      " lies inside the horizon " + std::to_string(r_h));
  }
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("mode frequency must be positive and finite");
  }
  if (!std::isfinite(d_hh)) throw DomainError("D_HH must be finite");
}

Temperature hawking_temperature(double r_h) {
  if (!(r_h > 0.0) || !std::isfinite(r_h)) {
    throw DomainError("horizon radius must be positive, got " +
                      std::to_string(r_h));
  }
  return {1.0 / (4.0 * std::numbers::pi * r_h)};
}

double hh_radicand(double x, double d_hh) noexcept {
  const double inv = 1.0 / x;
  return 1.0 + 2.0 * inv + inv * inv * (9.0 + 4.0 * d_hh - 36.0 * std::log(x));
}

double temperature_ratio_sq(double x, double d_hh) noexcept {
  return (1.0 - 1.0 / x) * hh_radicand(x, d_hh);
}

double temperature_ratio_sq_derivative(double x, double d_hh) noexcept {
  const double inv = 1.0 / x;
  const double c = 9.0 + 4.0 * d_hh - 36.0 * std::log(x);
  const double g = hh_radicand(x, d_hh);
  const double dg = -2.0 * inv * inv - (36.0 + 2.0 * c) * inv * inv * inv;
  return g * inv * inv + (1.0 - inv) * dg;
}

double temperature_ratio(double x, double d_hh) {
  if (!(x >= 1.0) || !std::isfinite(x)) {
    throw DomainError("r/r_H must be >= 1, got " + std::to_string(x));
  }
  if (x == 1.0) return 0.0;
  const double g = hh_radicand(x, d_hh);
  if (g < 0.0) {
    throw SubcriticalError("negative temperature radicand " +
                               std::to_string(g) + " at r/r_H = " +
                               std::to_string(x) + " for D_HH = " +
                               std::to_string(d_hh),
                           x, g);
  }
  return std::sqrt(1.0 - 1.0 / x) * std::sqrt(g);
}

Temperature local_temperature(const AtmospherePoint& p) {
  p.validate();
  const double th = hawking_temperature(p.r_h).value;
  if (p.r == p.r_h) return {0.0};
  try {
    return {th * temperature_ratio(p.ratio(), p.d_hh)};
  } catch (const SubcriticalError& e) {
    throw SubcriticalError("negative temperature radicand at r = " +
                               std::to_string(p.r) + " (r/r_H = " +
                               std::to_string(e.x()) + ", D_HH = " +
                               std::to_string(p.d_hh) + ")",
                           e.x(), e.radicand());
  }
}

double dhh_from_observables(double x, double tau) {
  if (!(x > 1.0) || !std::isfinite(x)) {
    throw DomainError("pole: D_HH inversion needs r/r_H > 1, got " +
                      std::to_string(x));
  }
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw DomainError("T_HH/T_H must be >= 0, got " + std::to_string(tau));
  }
  return 0.25 * (-x * x - 2.0 * x - 36.0 * std::log(1.0 / x) +
                 x * x * x * tau * tau / (x - 1.0) - 9.0);
}

RadicandMinimum radicand_minimum(double d_hh) {
  const std::vector<double>& xs = scan_grid();
  std::size_t best = 0;
  double best_val = hh_radicand(xs[0], d_hh);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double v = hh_radicand(xs[i], d_hh);
    if (v < best_val) {
      best = i;
      best_val = v;
    }
  }
  const double lo = xs[best == 0 ? 0 : best - 1];
  const double hi = xs[std::min(best + 1, xs.size() - 1)];
  const search::Extremum m = search::golden_minimize(
      [d_hh](double x) { return hh_radicand(x, d_hh); }, lo, hi, 1e-12);
  if (m.value < best_val) return {m.x, m.value};
  return {xs[best], best_val};
}

double peak_radius(double d_hh) {
  if (!std::isfinite(d_hh)) throw DomainError("D_HH must be finite");
  if (const RadicandMinimum m = radicand_minimum(d_hh); m.value < 0.0) {
    throw SubcriticalError("D_HH = " + std::to_string(d_hh) +
                               " is below the positivity threshold",
                           m.x, m.value);
  }

  const std::vector<double>& xs = scan_grid();
  std::size_t best = 0;
  double best_val = temperature_ratio_sq(xs[0], d_hh);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const double v = temperature_ratio_sq(xs[i], d_hh);
    if (v > best_val) {
      best = i;
      best_val = v;
    }
  }
  if (best == 0 || best + 1 == xs.size()) {
    throw SearchError("no interior temperature maximum for D_HH = " +
                      std::to_string(d_hh));
  }
  const double lo = xs[best - 1];
  const double hi = xs[best + 1];
  const auto f = [d_hh](double x) { return temperature_ratio_sq(x, d_hh); };
  const auto df = [d_hh](double x) {
    return temperature_ratio_sq_derivative(x, d_hh);
  };

  const search::Extremum golden = search::golden_maximize(f, lo, hi, 1e-10);
  // Golden section stalls near sqrt(machine eps); polish on the derivative
  // inside a small window that must show the sign change on both sides.
  double left = std::max(lo, golden.x - 1e-6);
  double right = std::min(hi, golden.x + 1e-6);
  if (!(df(left) > 0.0 && df(right) < 0.0)) {
    left = lo;
    right = hi;
    if (!(df(left) > 0.0 && df(right) < 0.0)) {
      throw SearchError("temperature derivative does not change sign around " +
                        std::to_string(golden.x));
    }
  }
  return search::bisect(df, left, right, 1e-13);
}

CriticalConstantResult critical_constant(double lower, double upper) {
  if (!(lower < upper) || !std::isfinite(lower) || !std::isfinite(upper)) {
    throw ContractViolation("critical constant search needs lower < upper");
  }
  const auto min_radicand = [](double d) { return radicand_minimum(d).value; };
  if (!(min_radicand(lower) < 0.0 && min_radicand(upper) >= 0.0)) {
    throw SearchError("search bounds [" + std::to_string(lower) + ", " +
                      std::to_string(upper) +
                      "] do not bracket the positivity threshold");
  }
  // Converge from above so the returned D satisfies the positivity test.
  double lo = lower;
  double hi = upper;
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    if (min_radicand(mid) >= 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const RadicandMinimum at = radicand_minimum(hi);
  return {hi, at.x, std::abs(at.value), lower, upper};
}

}  // namespace atmomin
