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

// Compiled with -mavx2 -mfma; this header must stay free of anything that
// would instantiate inline library code inside that translation unit.

#include <cstddef>

namespace atmomin::simd::avx2 {

double sum_sq_diff(const double* a, const double* b, std::size_t n) noexcept;

void dot_conj(const double* a, const double* b, std::size_t n, double* re,
              double* im) noexcept;

}  // namespace atmomin::simd::avx2
