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

#include "atmomin/fock_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include <Eigen/Eigenvalues>

#include "atmomin/error.hpp"
#include "atmomin/simd/kernels.hpp"

namespace atmomin {
namespace {

std::string dims_string(const Dims& dims) {
  std::string out = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(dims[i]);
  }
  return out + "]";
}

std::span<const Complex> flat(const Matrix& m) {
  return {m.data(), static_cast<std::size_t>(m.size())};
}

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Contract: return "contract";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Sizing: return "sizing";
    case ErrorKind::Truncation: return "cutoff-overflow";
    case ErrorKind::Search: return "search";
    case ErrorKind::Subcritical: return "subcritical-D";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

std::size_t total_dim(const Dims& dims) {
  std::size_t n = 1;
  for (std::size_t d : dims) {
    if (d == 0) throw ContractViolation("factor dimension must be positive");
    n *= d;
  }
  return n;
}

Operator::Operator(Matrix entries, Dims dims)
    : entries_(std::move(entries)), dims_(std::move(dims)) {
  if (entries_.rows() != entries_.cols()) {
    throw ContractViolation("operator must be square, got " +
                            std::to_string(entries_.rows()) + "x" +
                            std::to_string(entries_.cols()));
  }
  if (dims_.empty() ||
      total_dim(dims_) != static_cast<std::size_t>(entries_.rows())) {
    throw ContractViolation("dims " + dims_string(dims_) +
                            " do not match operator size " +
                            std::to_string(entries_.rows()));
  }
}

Operator Operator::identity(std::size_t n) {
  const auto s = static_cast<Eigen::Index>(n);
  return Operator(Matrix::Identity(s, s), Dims{n});
}

PureState::PureState(Vector amplitudes, Dims dims, double tail_defect)
    : amplitudes_(std::move(amplitudes)),
      dims_(std::move(dims)),
      tail_defect_(tail_defect) {
  if (dims_.empty() ||
      total_dim(dims_) != static_cast<std::size_t>(amplitudes_.size())) {
    throw ContractViolation("dims " + dims_string(dims_) +
                            " do not match amplitude count " +
                            std::to_string(amplitudes_.size()));
  }
  if (!(tail_defect_ >= 0.0 && tail_defect_ < 1.0)) {
    throw ContractViolation("tail defect must lie in [0, 1)");
  }
  const double norm2 = squared_norm();
  constexpr double slack = 1e-14;
  if (norm2 > 1.0 + slack || norm2 < 1.0 - tail_defect_ - slack) {
    throw ContractViolation("squared norm " + std::to_string(norm2) +
                            " outside [1 - tail_defect, 1]");
  }
}

DensityOperator::DensityOperator(Operator op, double tail_defect)
    : op_(std::move(op)), tail_defect_(tail_defect) {
  if (!(tail_defect_ >= 0.0 && tail_defect_ < 1.0)) {
    throw ContractViolation("tail defect must lie in [0, 1)");
  }
  const double herm = hermiticity_defect();
  if (herm >= kHermiticityTol) {
    throw ContractViolation("density operator not Hermitian (defect " +
                            std::to_string(herm) + ")");
  }
  const double tr = trace();
  if (tr > 1.0 + kTraceSlack || tr < 1.0 - tail_defect_ - kTraceSlack) {
    throw ContractViolation("density operator trace " + std::to_string(tr) +
                            " outside [1 - tail_defect, 1]");
  }
}

DensityOperator::DensityOperator(Matrix entries, Dims dims, double tail_defect)
    : DensityOperator(Operator(std::move(entries), std::move(dims)),
                      tail_defect) {}

DensityOperator DensityOperator::projector(const PureState& psi,
                                           std::size_t max_dim) {
  const auto n = static_cast<std::size_t>(psi.amplitudes().size());
  if (n > max_dim) {
    throw SizingError("projector dimension " + std::to_string(n) +
                      " exceeds maximum " + std::to_string(max_dim));
  }
  Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
  return DensityOperator(std::move(m), psi.dims(), psi.tail_defect());
}

double DensityOperator::hermiticity_defect() const {
  const Matrix& m = entries();
  double worst = 0.0;  // squared modulus, rooted once at the end
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      worst = std::max(worst, std::norm(m(i, j) - std::conj(m(j, i))));
    }
  }
  return std::sqrt(worst);
}

double DensityOperator::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries(),
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

void DensityOperator::validate() const {
  const double lo = min_eigenvalue();
  if (lo < kEigenvalueFloor) {
    throw ContractViolation("density operator has eigenvalue " +
                            std::to_string(lo) + " below floor");
  }
}

Operator compose(const Operator& a, const Operator& b, std::size_t max_dim) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  if (na != 0 && nb > max_dim / na) {
    throw SizingError("composed dimension " + std::to_string(na) + "*" +
                      std::to_string(nb) + " exceeds maximum " +
                      std::to_string(max_dim));
  }
  const auto sa = static_cast<Eigen::Index>(na);
  const auto sb = static_cast<Eigen::Index>(nb);
  Matrix out(sa * sb, sa * sb);
  for (Eigen::Index i = 0; i < sa; ++i) {
    for (Eigen::Index j = 0; j < sa; ++j) {
      out.block(i * sb, j * sb, sb, sb) = a.entries()(i, j) * b.entries();
    }
  }
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return Operator(std::move(out), std::move(dims));
}

DensityOperator partial_trace_last(const DensityOperator& rho) {
  const Dims& dims = rho.dims();
  if (dims.size() < 2) {
    throw ContractViolation("partial trace needs at least two factors");
  }
  const auto last = static_cast<Eigen::Index>(dims.back());
  const Dims kept(dims.begin(), dims.end() - 1);
  const auto keep = static_cast<Eigen::Index>(total_dim(kept));

  const Matrix& m = rho.entries();
  Matrix out = Matrix::Zero(keep, keep);
  for (Eigen::Index b = 0; b < keep; ++b) {
    for (Eigen::Index a = 0; a < keep; ++a) {
      Complex acc{0.0, 0.0};
      for (Eigen::Index k = 0; k < last; ++k) {
        acc += m(a * last + k, b * last + k);
      }
      out(a, b) = acc;
    }
  }
  return DensityOperator(std::move(out), kept, rho.tail_defect());
}

DensityOperator partial_trace_last(const PureState& psi) {
  const Dims& dims = psi.dims();
  if (dims.size() < 2) {
    throw ContractViolation("partial trace needs at least two factors");
  }
  const std::size_t last = dims.back();
  const Dims kept(dims.begin(), dims.end() - 1);
  const std::size_t keep = total_dim(kept);
  if (keep > kDefaultMaxDim) {
    throw SizingError("reduced dimension " + std::to_string(keep) +
                      " exceeds maximum " + std::to_string(kDefaultMaxDim));
  }

  const Complex* amps = psi.amplitudes().data();
  const auto n = static_cast<Eigen::Index>(keep);
  Matrix out(n, n);
  for (std::size_t a = 0; a < keep; ++a) {
    const std::span<const Complex> row_a{amps + a * last, last};
    for (std::size_t b = a; b < keep; ++b) {
      const std::span<const Complex> row_b{amps + b * last, last};
      const Complex v = simd::dot_conj(row_a, row_b);
      const auto ia = static_cast<Eigen::Index>(a);
      const auto ib = static_cast<Eigen::Index>(b);
      if (a == b) {
        out(ia, ia) = Complex{v.real(), 0.0};
      } else {
        out(ia, ib) = v;
        out(ib, ia) = std::conj(v);
      }
    }
  }
  return DensityOperator(std::move(out), kept, psi.tail_defect());
}

double hs_distance_sq(const Operator& a, const Operator& b) {
  if (a.dims() != b.dims()) {
    throw ContractViolation("hs distance: dims " + dims_string(a.dims()) +
                            " vs " + dims_string(b.dims()));
  }
  return simd::sum_abs2_diff(flat(a.entries()), flat(b.entries()));
}

double hs_distance_sq(const DensityOperator& a, const DensityOperator& b) {
  return hs_distance_sq(a.op(), b.op());
}

}  // namespace atmomin
