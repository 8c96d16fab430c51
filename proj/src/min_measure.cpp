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

#include "atmomin/min_measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "atmomin/error.hpp"
#include "atmomin/search.hpp"

namespace atmomin {
namespace {

void require_qubit_first(const DensityOperator& rho) {
  if (rho.dims().size() < 2 || rho.dims().front() != 2) {
    throw ContractViolation(
        "measurement needs a state on A (x) B with dim(A) = 2");
  }
}

void require_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw DomainError("entanglement parameter must lie in [0, 1], got " +
                      std::to_string(eta));
  }
}

Matrix measured_entries(const DensityOperator& rho, const BlochVector& x) {
  const auto d = static_cast<Eigen::Index>(rho.dim() / 2);
  const Matrix& in = rho.entries();
  const ProjectorPair p = projectors(x);

  // Block (i, j) of sum_a (P_a (x) I) rho (P_a (x) I) is
  // sum_kl c_ijkl rho_kl with c_ijkl = sum_a P_a(i, k) P_a(l, j).
  Matrix out = Matrix::Zero(in.rows(), in.cols());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      auto block = out.block(i * d, j * d, d, d);
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          const Complex c =
              p.plus(i, k) * p.plus(l, j) + p.minus(i, k) * p.minus(l, j);
          if (c == Complex{0.0, 0.0}) continue;
          block += c * in.block(k * d, l * d, d, d);
        }
      }
    }
  }
  return out;
}

}  // namespace

BlochVector::BlochVector(double x1, double x2, double x3)
    : x1_(x1), x2_(x2), x3_(x3) {
  const double norm2 = x1 * x1 + x2 * x2 + x3 * x3;
  if (!(std::abs(norm2 - 1.0) <= kUnitTol)) {
    throw DomainError("Bloch vector must be a unit vector, |x|^2 = " +
                      std::to_string(norm2));
  }
}

BlochVector BlochVector::from_polar(double x3, double azimuth) {
  if (!(x3 >= -1.0 && x3 <= 1.0)) {
    throw DomainError("x3 must lie in [-1, 1], got " + std::to_string(x3));
  }
  const double rho = std::sqrt(std::max(0.0, 1.0 - x3 * x3));
  return BlochVector(rho * std::cos(azimuth), rho * std::sin(azimuth), x3);
}

ProjectorPair projectors(const BlochVector& x) {
  const Complex off_lo{x.x1(), x.x2()};   // x1 + i x2, the |1><0| entry
  const Complex off_hi{x.x1(), -x.x2()};  // x1 - i x2, the |0><1| entry
  ProjectorPair p;
  p.plus << 0.5 * (1.0 + x.x3()), 0.5 * off_hi,
            0.5 * off_lo, 0.5 * (1.0 - x.x3());
  p.minus << 0.5 * (1.0 - x.x3()), -0.5 * off_hi,
             -0.5 * off_lo, 0.5 * (1.0 + x.x3());
  return p;
}

DensityOperator apply_measurement(const DensityOperator& rho,
                                  const BlochVector& x) {
  require_qubit_first(rho);
  return DensityOperator(measured_entries(rho, x), rho.dims(),
                         rho.tail_defect());
}

std::pair<double, double> outcome_probabilities(const DensityOperator& rho,
                                                const BlochVector& x) {
  require_qubit_first(rho);
  const auto d = static_cast<Eigen::Index>(rho.dim() / 2);
  const Matrix& m = rho.entries();
  Eigen::Matrix2cd alice;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) alice(i, j) = m.block(i * d, j * d, d, d).trace();
  }
  const ProjectorPair p = projectors(x);
  return {(p.plus * alice).trace().real(), (p.minus * alice).trace().real()};
}

double disturbance_numeric(const DensityOperator& rho, const BlochVector& x) {
  require_qubit_first(rho);
  return hs_distance_sq(rho.op(), Operator(measured_entries(rho, x), rho.dims()));
}

DisturbanceProfile::DisturbanceProfile(const DensityOperator& rho) {
  require_qubit_first(rho);
  const auto d = static_cast<Eigen::Index>(rho.dim() / 2);
  const Matrix& m = rho.entries();
  const auto block = [&](int kl) { return m.block((kl / 2) * d, (kl % 2) * d, d, d); };
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) {
      gram_(a, b) = (block(a).conjugate().cwiseProduct(block(b))).sum();
      gram_(b, a) = std::conj(gram_(a, b));
    }
  }
}

double DisturbanceProfile::operator()(const BlochVector& x) const {
  // Row ij of `a` maps the blocks rho_kl to the block ij of rho - Pi(rho).
  const ProjectorPair p = projectors(x);
  Eigen::Matrix4cd a;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          const Complex c =
              p.plus(i, k) * p.plus(l, j) + p.minus(i, k) * p.minus(l, j);
          a(2 * i + j, 2 * k + l) = (i == k && j == l ? 1.0 : 0.0) - c;
        }
      }
    }
  }
  return (a.conjugate() * gram_ * a.transpose()).trace().real();
}

BobTraces bob_traces(const SqueezingParam& t, double eta) {
  require_eta(eta);
  const double s = t.value() * t.value();
  const double q = s * s;
  const double e1 = (eta + 1.0) * (eta + 1.0);
  BobTraces tr{};
  tr.m00_sq = 0.25 * e1 / (1.0 - q);
  tr.m01_m10 = eta * eta * (1.0 - s) / ((q - 1.0) * (q - 1.0));
  tr.m11_sq = -e1 * (q + 1.0) / (4.0 * (s - 1.0) * std::pow(s + 1.0, 3));
  tr.m00_m11 = 0.25 * e1 * (1.0 - s) * s / ((1.0 - q) * (1.0 - q));
  return tr;
}

double disturbance_closed_form(const SqueezingParam& t, double eta, double x3) {
  if (!(x3 >= -1.0 && x3 <= 1.0)) {
    throw DomainError("x3 must lie in [-1, 1], got " + std::to_string(x3));
  }
  const BobTraces tr = bob_traces(t, eta);
  const double s = t.value() * t.value();
  const double diag = tr.m00_sq + tr.m11_sq - 2.0 * tr.m00_m11;
  const double bracket =
      (1.0 - x3 * x3) * diag + 2.0 * (1.0 + x3 * x3) * tr.m01_m10;
  return (1.0 - s) * (1.0 - s) / 8.0 * bracket;
}

double min_paper_final(const SqueezingParam& t, double eta) {
  require_eta(eta);
  const double s = t.value() * t.value();
  const double q = s * s;
  return eta * eta * std::pow(1.0 - s, 2) * std::pow(s - 1.0, 3) * (q + 1.0) /
         (8.0 * std::pow(q - 1.0, 3));
}

double discord_direction_value(const SqueezingParam& t, double eta) {
  return disturbance_closed_form(t, eta, 0.0);
}

MinReport min_numeric(const DensityOperator& rho, const SqueezingParam& t,
                      const MinOptions& options) {
  require_qubit_first(rho);
  require_eta(options.eta);
  if (options.grid_points < 2) {
    throw ContractViolation("min_numeric needs at least 2 grid points");
  }

  {
    const auto d = static_cast<Eigen::Index>(rho.dim() / 2);
    const Matrix& m = rho.entries();
    double defect = 0.0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const Complex target = i == j ? Complex{0.5, 0.0} : Complex{0.0, 0.0};
        defect = std::max(
            defect, std::abs(m.block(i * d, j * d, d, d).trace() - target));
      }
    }
    if (defect > 1e-8 + rho.tail_defect()) {
      throw ContractViolation(
          "Alice marginal is not maximally mixed (defect " +
          std::to_string(defect) +
          "); the locally-invariant measurement set would be restricted");
    }
  }

  // Search on the reduced quadratic form; the reported value is dense.
  const DisturbanceProfile profile(rho);
  const auto disturbance = [&profile](double x3) {
    return profile(BlochVector::from_polar(x3));
  };

  // Coarse grid from x3 = +1 down to -1; the first maximum wins ties.
  const int g = options.grid_points;
  std::vector<double> xs(static_cast<std::size_t>(g));
  std::vector<double> fs(static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i) {
    const double x3 = i == g - 1 ? -1.0 : 1.0 - 2.0 * i / (g - 1);
    xs[static_cast<std::size_t>(i)] = x3;
    fs[static_cast<std::size_t>(i)] = disturbance(x3);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < fs.size(); ++i) {
    if (fs[i] > fs[best]) best = i;
  }
  const auto [lo_it, hi_it] = std::minmax_element(fs.begin(), fs.end());

  const double hi = xs[best == 0 ? 0 : best - 1];
  const double lo = xs[std::min(best + 1, xs.size() - 1)];
  search::Extremum peak{xs[best], fs[best]};
  const search::Extremum refined =
      search::golden_maximize(disturbance, lo, hi, options.x3_tol);
  if (refined.value > peak.value) peak = refined;

  MinReport report;
  report.flat = (*hi_it - *lo_it) < options.flat_tol;
  // A flat profile has no preferred direction; report the x3 = +1 pole.
  if (report.flat) peak.x = 1.0;
  report.argmax = BlochVector::from_polar(peak.x);
  report.value_numeric = disturbance_numeric(rho, report.argmax);
  report.value_closed_x3_1 = disturbance_closed_form(t, options.eta, 1.0);
  report.value_paper_final = min_paper_final(t, options.eta);
  report.value_x3_0 = discord_direction_value(t, options.eta);
  report.cutoff_used = static_cast<long>(rho.dims()[1]) - 2;
  report.max_abs_residual = std::abs(
      report.value_numeric - disturbance_closed_form(t, options.eta, peak.x));
  return report;
}

MinReport min_numeric(const SqueezingParam& t, const CutoffPolicy& policy,
                      const MinOptions& options) {
  const long n = choose_cutoff(t, policy);
  MinReport report = min_numeric(reduced_state(t, n), t, options);
  report.cutoff_used = n;
  return report;
}

}  // namespace atmomin
