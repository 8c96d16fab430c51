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

#include "atmomin/simd/kernels.hpp"

namespace atmomin::simd {
namespace {

double sum_sq_diff_scalar(const double* a, const double* b,
                          std::size_t n) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

void dot_conj_scalar(const double* a, const double* b, std::size_t n,
                     double* re, double* im) noexcept {
  double sr = 0.0;
  double si = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[2 * i];
    const double ai = a[2 * i + 1];
    const double br = b[2 * i];
    const double bi = b[2 * i + 1];
    sr += ar * br + ai * bi;
    si += ai * br - ar * bi;
  }
  *re = sr;
  *im = si;
}

constexpr KernelTable kScalar{"scalar", &sum_sq_diff_scalar,
                              &dot_conj_scalar};

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

}  // namespace atmomin::simd
