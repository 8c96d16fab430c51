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

// Bounded one-dimensional searches shared by the measurement and
// atmosphere layers.

#include <cmath>
#include <utility>

#include "atmomin/error.hpp"

namespace atmomin::search {

struct Extremum {
  double x;
  double value;
};

/// Golden-section maximisation of a unimodal `f` on [lo, hi] until the
/// bracket is narrower than `tol`. Returns the best point seen, including
/// the endpoints, so monotone functions converge to the boundary.
template <class F>
Extremum golden_maximize(F&& f, double lo, double hi, double tol) {
  if (!(lo <= hi)) throw ContractViolation("golden section: empty bracket");
  constexpr double inv_phi = 0.6180339887498948482;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  Extremum best{c, fc};
  if (fd > best.value) best = {d, fd};
  const double mid = 0.5 * (a + b);
  if (const double fm = f(mid); fm > best.value) best = {mid, fm};
  if (const double fl = f(lo); fl > best.value) best = {lo, fl};
  if (const double fh = f(hi); fh > best.value) best = {hi, fh};
  return best;
}

template <class F>
Extremum golden_minimize(F&& f, double lo, double hi, double tol) {
  Extremum e =
      golden_maximize([&f](double x) { return -f(x); }, lo, hi, tol);
  e.value = -e.value;
  return e;
}

/// Root of `f` on [lo, hi] by bisection; f(lo) and f(hi) must differ in sign.
template <class F>
double bisect(F&& f, double lo, double hi, double tol, int max_iter = 200) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw SearchError("bisection: endpoints do not bracket a sign change");
  }
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace atmomin::search
