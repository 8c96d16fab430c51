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

// Measurement-induced nonlocality of the reduced A (x) B_I state.
//
// Alice's qubit is measured in the basis of a Bloch vector x; the
// disturbance is the squared Hilbert-Schmidt distance between the state and
// its dephased image. Two routes are provided and cross-checked:
//
//  - a dense route (`disturbance_numeric`, `min_numeric`) that works on any
//    truncated density operator, and
//  - closed forms in the squeezing parameter t (`disturbance_closed_form`,
//    `min_paper_final`, `discord_direction_value`).

#include <Eigen/Dense>

#include "atmomin/fock_linalg.hpp"
#include "atmomin/kruskal_states.hpp"

namespace atmomin {

class BlochVector {
 public:
  static constexpr double kUnitTol = 1e-12;

  /// Throws DomainError unless x1^2 + x2^2 + x3^2 = 1 within kUnitTol.
  BlochVector(double x1, double x2, double x3);

  /// (sqrt(1 - x3^2) cos phi, sqrt(1 - x3^2) sin phi, x3).
  static BlochVector from_polar(double x3, double azimuth = 0.0);

  double x1() const noexcept { return x1_; }
  double x2() const noexcept { return x2_; }
  double x3() const noexcept { return x3_; }

 private:
  double x1_;
  double x2_;
  double x3_;
};

struct ProjectorPair {
  Eigen::Matrix2cd plus;
  Eigen::Matrix2cd minus;
};

/// Pi_pm = (I pm x.sigma) / 2.
ProjectorPair projectors(const BlochVector& x);

/// sum_alpha (Pi_alpha (x) I) rho (Pi_alpha (x) I). The first factor of rho
/// must have dimension 2.
DensityOperator apply_measurement(const DensityOperator& rho,
                                  const BlochVector& x);

/// Alice outcome probabilities Tr((Pi_pm (x) I) rho).
std::pair<double, double> outcome_probabilities(const DensityOperator& rho,
                                                const BlochVector& x);

/// ||rho - Pi(rho)||_HS^2.
double disturbance_numeric(const DensityOperator& rho, const BlochVector& x);

/// The disturbance of one fixed state as a function of the direction.
/// ||rho - Pi_x(rho)||^2 is a quadratic form in the four Alice blocks of rho,
/// so after one pass over the state (the 4x4 Gram matrix of the blocks) each
/// evaluation is O(1). Equal to `disturbance_numeric` up to rounding.
class DisturbanceProfile {
 public:
  explicit DisturbanceProfile(const DensityOperator& rho);
  double operator()(const BlochVector& x) const;

 private:
  Eigen::Matrix4cd gram_;
};

/// Traces of Bob's M-blocks in closed form (sums over n resummed).
struct BobTraces {
  double m00_sq;   // Tr M00^2
  double m11_sq;   // Tr M11^2
  double m00_m11;  // Tr M00 M11
  double m01_m10;  // Tr M01 M10
};

BobTraces bob_traces(const SqueezingParam& t, double eta);

/// (1-t^2)^2/8 [(1-x3^2)(Tr M00^2 + Tr M11^2 - 2 Tr M00M11)
///              + 2(1+x3^2) Tr M01M10].
double disturbance_closed_form(const SqueezingParam& t, double eta, double x3);

/// The printed final MIN expression, evaluated as written.
double min_paper_final(const SqueezingParam& t, double eta);

/// Disturbance along the equator (x3 = 0).
double discord_direction_value(const SqueezingParam& t, double eta);

struct MinOptions {
  double eta = 1.0;
  int grid_points = 201;
  double x3_tol = 1e-10;
  double flat_tol = 1e-10;
};

struct MinReport {
  double value_numeric = 0.0;
  BlochVector argmax{0.0, 0.0, 1.0};
  double value_closed_x3_1 = 0.0;
  double value_paper_final = 0.0;
  double value_x3_0 = 0.0;
  long cutoff_used = 0;
  double max_abs_residual = 0.0;
  /// The sampled disturbance varied by less than MinOptions::flat_tol.
  bool flat = false;
};

/// Maximises the dense disturbance over x3 (azimuth fixed) and fills the
/// closed-form columns at `t`. Throws ContractViolation if Alice's marginal
/// is not maximally mixed within 1e-8 (plus the state's tail defect).
MinReport min_numeric(const DensityOperator& rho, const SqueezingParam& t,
                      const MinOptions& options = {});

/// Builds reduced_state(t, choose_cutoff(t, policy)) and runs the above.
MinReport min_numeric(const SqueezingParam& t, const CutoffPolicy& policy,
                      const MinOptions& options = {});

}  // namespace atmomin
