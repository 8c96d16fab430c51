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

// Dense linear algebra on truncated occupation-number spaces.
//
// Composite indices follow the Kronecker convention: the first factor is the
// most significant digit. Every object carries its ordered factor dimensions
// and, for states, the probability weight lost to truncation ("tail defect").

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace atmomin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Dims = std::vector<std::size_t>;

/// Largest composite dimension any builder may allocate.
inline constexpr std::size_t kDefaultMaxDim = 4096;

std::size_t total_dim(const Dims& dims);

/// Square operator with a factor structure.
class Operator {
 public:
  Operator(Matrix entries, Dims dims);

  const Matrix& entries() const noexcept { return entries_; }
  const Dims& dims() const noexcept { return dims_; }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  Complex trace() const { return entries_.trace(); }

  static Operator identity(std::size_t n);

 private:
  Matrix entries_;
  Dims dims_;
};

/// Truncated ket. Squared norm is 1 - tail_defect up to arithmetic.
class PureState {
 public:
  PureState(Vector amplitudes, Dims dims, double tail_defect);

  const Vector& amplitudes() const noexcept { return amplitudes_; }
  const Dims& dims() const noexcept { return dims_; }
  double tail_defect() const noexcept { return tail_defect_; }
  double squared_norm() const { return amplitudes_.squaredNorm(); }

 private:
  Vector amplitudes_;
  Dims dims_;
  double tail_defect_;
};

/// Hermitian, trace in [1 - tail_defect, 1]. Positivity is checked on demand
/// by `validate()` since it needs a full eigensolve.
class DensityOperator {
 public:
  static constexpr double kHermiticityTol = 1e-12;
  static constexpr double kEigenvalueFloor = -1e-10;
  static constexpr double kTraceSlack = 1e-12;

  DensityOperator(Operator op, double tail_defect);
  DensityOperator(Matrix entries, Dims dims, double tail_defect);

  /// |psi><psi| on the full space; subject to `max_dim`.
  static DensityOperator projector(const PureState& psi,
                                   std::size_t max_dim = kDefaultMaxDim);

  const Operator& op() const noexcept { return op_; }
  const Matrix& entries() const noexcept { return op_.entries(); }
  const Dims& dims() const noexcept { return op_.dims(); }
  std::size_t dim() const noexcept { return op_.dim(); }
  double tail_defect() const noexcept { return tail_defect_; }
  double trace() const { return op_.trace().real(); }

  double hermiticity_defect() const;
  double min_eigenvalue() const;

  /// Throws ContractViolation if the eigenvalue floor is violated.
  void validate() const;

 private:
  Operator op_;
  double tail_defect_;
};

/// a (x) b with dims concatenated. Throws SizingError above `max_dim`.
Operator compose(const Operator& a, const Operator& b,
                 std::size_t max_dim = kDefaultMaxDim);

/// Traces out the last factor.
DensityOperator partial_trace_last(const DensityOperator& rho);

/// Reduced operator of |psi><psi| over the last factor, without forming the
/// full projector: rho(a, b) = sum_k psi[a, k] conj(psi[b, k]).
DensityOperator partial_trace_last(const PureState& psi);

/// Tr((a - b)^dagger (a - b)).
double hs_distance_sq(const Operator& a, const Operator& b);
double hs_distance_sq(const DensityOperator& a, const DensityOperator& b);

}  // namespace atmomin
