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

// Dense inner-loop kernels over interleaved complex<double> data.
//
// Every kernel has a scalar reference implementation; wider variants are
// compiled into separate translation units with their own ISA flags and
// chosen once per process by `active()`. ATMOMIN_SIMD={scalar,avx2,auto}
// overrides the choice.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace atmomin::simd {

/// Raw kernel signatures. Pointers address interleaved (re, im) pairs.
struct KernelTable {
  std::string_view name;
  /// sum_k (a[k] - b[k])^2 over `n_doubles` reals.
  double (*sum_sq_diff)(const double* a, const double* b,
                        std::size_t n_doubles) noexcept;
  /// sum_i a[i] * conj(b[i]) over `n_complex` entries.
  void (*dot_conj)(const double* a, const double* b, std::size_t n_complex,
                   double* re, double* im) noexcept;
};

const KernelTable& scalar_table() noexcept;

/// nullptr when the AVX2 table is not compiled in or the CPU lacks AVX2+FMA.
const KernelTable* avx2_table() noexcept;

/// The table chosen for this process (first call decides).
const KernelTable& active() noexcept;

// Typed entry points on the active table.

double sum_abs2_diff(std::span<const std::complex<double>> a,
                     std::span<const std::complex<double>> b) noexcept;

std::complex<double> dot_conj(std::span<const std::complex<double>> a,
                              std::span<const std::complex<double>> b) noexcept;

// Same, on an explicit table (used by the equivalence tests).

double sum_abs2_diff(const KernelTable& table,
                     std::span<const std::complex<double>> a,
                     std::span<const std::complex<double>> b) noexcept;

std::complex<double> dot_conj(const KernelTable& table,
                              std::span<const std::complex<double>> a,
                              std::span<const std::complex<double>> b) noexcept;

}  // namespace atmomin::simd
