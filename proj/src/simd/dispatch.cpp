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

#include <cstdlib>
#include <string_view>

#include "atmomin/simd/kernels.hpp"

#if defined(ATMOMIN_HAVE_AVX2)
#include "kernels_avx2.hpp"
#endif

namespace atmomin::simd {
namespace {

#if defined(ATMOMIN_HAVE_AVX2)
constexpr KernelTable kAvx2{"avx2", &avx2::sum_sq_diff, &avx2::dot_conj};
#endif

bool cpu_has_avx2() noexcept {
#if defined(ATMOMIN_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& select() noexcept {
  const char* env = std::getenv("ATMOMIN_SIMD");
  const std::string_view request = env ? env : "auto";
  if (request == "scalar") return scalar_table();
  if (const KernelTable* wide = avx2_table()) return *wide;
  return scalar_table();
}

}  // namespace

const KernelTable* avx2_table() noexcept {
#if defined(ATMOMIN_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

double sum_abs2_diff(const KernelTable& table,
                     std::span<const std::complex<double>> a,
                     std::span<const std::complex<double>> b) noexcept {
  const auto* pa = reinterpret_cast<const double*>(a.data());
  const auto* pb = reinterpret_cast<const double*>(b.data());
  return table.sum_sq_diff(pa, pb, 2 * a.size());
}

std::complex<double> dot_conj(const KernelTable& table,
                              std::span<const std::complex<double>> a,
                              std::span<const std::complex<double>> b) noexcept {
  const auto* pa = reinterpret_cast<const double*>(a.data());
  const auto* pb = reinterpret_cast<const double*>(b.data());
  double re = 0.0;
  double im = 0.0;
  table.dot_conj(pa, pb, a.size(), &re, &im);
  return {re, im};
}

double sum_abs2_diff(std::span<const std::complex<double>> a,
                     std::span<const std::complex<double>> b) noexcept {
  return sum_abs2_diff(active(), a, b);
}

std::complex<double> dot_conj(std::span<const std::complex<double>> a,
                              std::span<const std::complex<double>> b) noexcept {
  return dot_conj(active(), a, b);
}

}  // namespace atmomin::simd
