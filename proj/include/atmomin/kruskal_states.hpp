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

// Thermal two-mode bosonic states in the Kruskal decomposition and the
// reduced Alice / region-I density operator.
//
// Factor order is (A, B_I, B_II). B_I has dimension N+2 so the excited
// branch's top state |N+1> fits; B_II has dimension N+1.

#include <cstddef>

#include "atmomin/fock_linalg.hpp"

namespace atmomin {

/// t = tanh r in [0, 1).
class SqueezingParam {
 public:
  explicit SqueezingParam(double t);

  double value() const noexcept { return t_; }
  double cosh_r() const;

 private:
  double t_;
};

enum class ExponentConvention {
  HalfExponent,  // t = exp(-Omega / 2T)
  FullExponent,  // t = exp(-Omega / T)
};

const char* to_string(ExponentConvention c) noexcept;

struct ModeSpec {
  double omega = 1.0;
  ExponentConvention convention = ExponentConvention::HalfExponent;
};

struct CutoffPolicy {
  double epsilon_tail = 1e-12;
  long n_max_cap = 2048;
};

/// Throws DomainError on T < 0, non-finite T, or omega <= 0.
SqueezingParam squeezing_from_temperature(double temperature,
                                          const ModeSpec& mode);

/// Smallest N with t^(2(N+1)) <= epsilon_tail; 0 for t == 0.
/// Throws TruncationError if N would exceed the cap.
long choose_cutoff(const SqueezingParam& t, const CutoffPolicy& policy = {});

// Analytic truncation losses at cutoff N.
double vacuum_tail(const SqueezingParam& t, long n);
double excited_tail(const SqueezingParam& t, long n);

/// sqrt(1-t^2) sum_n t^n |n>_I |n>_II on dims [N+2, N+1].
PureState kruskal_vacuum(const SqueezingParam& t, long n);

/// (1-t^2) sum_n sqrt(n+1) t^n |n+1>_I |n>_II on dims [N+2, N+1].
PureState kruskal_excited(const SqueezingParam& t, long n);

/// (|0>_A |vacuum> + |1>_A |excited>) / sqrt(2) on dims [2, N+2, N+1].
PureState lifted_bell(const SqueezingParam& t, long n);

/// Tr_{B_II} of the lifted Bell projector, dims [2, N+2].
DensityOperator reduced_state(const SqueezingParam& t, long n);

}  // namespace atmomin
