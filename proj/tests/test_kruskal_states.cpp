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

#include <doctest.h>

#include <cmath>

#include "atmomin/error.hpp"
#include "atmomin/kruskal_states.hpp"
#include "test_support.hpp"

using namespace atmomin;
using namespace atmomin::testing;

namespace {

constexpr ModeSpec kHalf{1.0, ExponentConvention::HalfExponent};
constexpr ModeSpec kFull{1.0, ExponentConvention::FullExponent};

// Brute-force cutoff: first N whose vacuum tail clears eps.
long enumerate_cutoff(double t, double eps) {
  for (long n = 0;; ++n) {
    if (std::pow(t * t, n + 1) <= eps) return n;
  }
}

// Omitted weight of the excited series, summed term by term.
double excited_tail_by_summation(double t, long n) {
  const double s = t * t;
  double acc = 0.0;
  for (long m = n + 1; m < n + 20000; ++m) {
    acc += (1 - s) * (1 - s) * static_cast<double>(m + 1) * std::pow(s, m);
  }
  return acc;
}

Eigen::Matrix2cd alice_marginal(const DensityOperator& rho_ab) {
  const auto d = static_cast<Eigen::Index>(rho_ab.dim() / 2);
  Eigen::Matrix2cd a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = rho_ab.entries().block(i * d, j * d, d, d).trace();
  return a;
}

}  // namespace

TEST_SUITE("squeezing") {
  TEST_CASE("closed-form points") {
    CHECK(squeezing_from_temperature(0.0, kHalf).value() == 0.0);
    CHECK(squeezing_from_temperature(0.0, kFull).value() == 0.0);
    CHECK(squeezing_from_temperature(1.0 / (2.0 * std::log(2.0)), kHalf).value() ==
          doctest::Approx(0.5).epsilon(1e-15));
    CHECK(squeezing_from_temperature(1.0 / std::log(2.0), kFull).value() ==
          doctest::Approx(0.5).epsilon(1e-15));
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(squeezing_from_temperature(-1e-3, kHalf), DomainError);
    CHECK_THROWS_AS(squeezing_from_temperature(INFINITY, kHalf), DomainError);
    CHECK_THROWS_AS(squeezing_from_temperature(NAN, kHalf), DomainError);
    CHECK_THROWS_AS(squeezing_from_temperature(1.0, {0.0}), DomainError);
    CHECK_THROWS_AS(SqueezingParam(1.0), DomainError);
    CHECK_THROWS_AS(SqueezingParam(-0.1), DomainError);
  }

  TEST_CASE("cosh r from t") {
    CHECK(SqueezingParam(0.0).cosh_r() == 1.0);
    CHECK(SqueezingParam(0.6).cosh_r() == doctest::Approx(1.25));
  }

  TEST_CASE("monotone in T and in Omega on a 20x20 grid") {
    for (const ExponentConvention c :
         {ExponentConvention::HalfExponent, ExponentConvention::FullExponent}) {
      for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) {
          const double temp = 0.05 + 0.25 * i;
          const double omega = 0.1 + 0.2 * j;
          const double t = squeezing_from_temperature(temp, {omega, c}).value();
          if (i + 1 < 20) {
            CHECK(squeezing_from_temperature(temp + 0.25, {omega, c}).value() > t);
          }
          if (j + 1 < 20) {
            CHECK(squeezing_from_temperature(temp, {omega + 0.2, c}).value() < t);
          }
        }
      }
    }
  }
}

TEST_SUITE("choose_cutoff") {
  TEST_CASE("worked values") {
    CHECK(choose_cutoff(SqueezingParam(0.0)) == 0);
    CHECK(choose_cutoff(SqueezingParam(0.5)) == 19);
    CHECK(std::pow(0.25, 20) <= 1e-12);
    CHECK(std::pow(0.25, 19) > 1e-12);
  }

  TEST_CASE("matches brute-force enumeration") {
    for (double t : {0.01, 0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99}) {
      for (double eps : {1e-6, 1e-12, 1e-15}) {
        CAPTURE(t);
        CAPTURE(eps);
        CHECK(choose_cutoff(SqueezingParam(t), {eps, 100000}) ==
              enumerate_cutoff(t, eps));
      }
    }
  }

  TEST_CASE("cap overflow reports the achievable epsilon") {
    try {
      (void)choose_cutoff(SqueezingParam(0.9), {1e-12, 64});
      FAIL("expected TruncationError");
    } catch (const TruncationError& e) {
      CHECK(e.required_cutoff() == enumerate_cutoff(0.9, 1e-12));
      CHECK(e.required_cutoff() > 64);
      CHECK(e.achievable_epsilon() == doctest::Approx(std::pow(0.81, 65)));
    }
  }
}

TEST_SUITE("builders") {
  TEST_CASE("zero temperature states are exact basis kets") {
    const SqueezingParam zero(0.0);
    const PureState vac = kruskal_vacuum(zero, 0);
    CHECK(vac.dims() == Dims{2, 1});
    CHECK(vac.amplitudes()(0) == Complex{1.0, 0.0});
    CHECK(vac.amplitudes().squaredNorm() == 1.0);

    const PureState exc = kruskal_excited(zero, 0);
    CHECK(exc.amplitudes()(1) == Complex{1.0, 0.0});  // |1>_I |0>_II
    CHECK(exc.amplitudes().squaredNorm() == 1.0);

    const PureState bell = lifted_bell(zero, 0);
    CHECK(bell.dims() == Dims{2, 2, 1});
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(bell.amplitudes()(0).real() == h);  // |0, 0, 0>
    CHECK(bell.amplitudes()(3).real() == h);  // |1, 1, 0>
    CHECK(std::abs(bell.amplitudes().squaredNorm() - 1.0) < 1e-15);
  }

  TEST_CASE("amplitudes at t = 0.5") {
    const SqueezingParam t(0.5);
    const long n = 10;
    const std::size_t dim_ii = n + 1;
    const PureState vac = kruskal_vacuum(t, n);
    const double a22 = vac.amplitudes()(static_cast<Eigen::Index>(2 * dim_ii + 2)).real();
    CHECK(a22 == doctest::Approx(std::sqrt(0.75) * 0.25).epsilon(1e-15));
    CHECK(a22 == doctest::Approx(0.21650635).epsilon(1e-8));
    CHECK(vac.squared_norm() == doctest::Approx(1.0 - std::pow(0.5, 22)).epsilon(1e-15));
    CHECK(1.0 - vac.squared_norm() == doctest::Approx(2.384185791015625e-7).epsilon(1e-9));

    const PureState exc = kruskal_excited(t, n);
    const double b21 = exc.amplitudes()(static_cast<Eigen::Index>(2 * dim_ii + 1)).real();
    CHECK(b21 == doctest::Approx(0.75 * std::sqrt(2.0) * 0.5).epsilon(1e-15));
    CHECK(b21 == doctest::Approx(0.53033009).epsilon(1e-8));
  }

  TEST_CASE("norm accounting: 1 - |psi|^2 equals the declared tail") {
    const CutoffPolicy policy;
    for (int k = 0; k <= 9; ++k) {
      const SqueezingParam t(0.1 * k);
      const long n = choose_cutoff(t, policy);
      for (const PureState& psi :
           {kruskal_vacuum(t, n), kruskal_excited(t, n), lifted_bell(t, n)}) {
        CAPTURE(k);
        CHECK(std::abs((1.0 - psi.squared_norm()) - psi.tail_defect()) < 1e-13);
      }
      // Orthogonal branches.
      const double expected = 0.5 * (vacuum_tail(t, n) + excited_tail(t, n));
      CHECK(lifted_bell(t, n).tail_defect() == doctest::Approx(expected));
    }
  }

  TEST_CASE("tails: vacuum within eps, excited within (1 + K(1-s)) eps") {
    const CutoffPolicy policy;
    for (double tv : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const SqueezingParam t(tv);
      const long n = choose_cutoff(t, policy);
      CAPTURE(tv);
      CHECK(vacuum_tail(t, n) <= policy.epsilon_tail);
      CHECK(excited_tail(t, n) ==
            doctest::Approx(excited_tail_by_summation(tv, n)).epsilon(1e-9));
      const double k = static_cast<double>(n + 1);
      CHECK(excited_tail(t, n) <= (1.0 + k * (1.0 - tv * tv)) * policy.epsilon_tail);
      CHECK(kruskal_excited(t, n).squared_norm() >=
            1.0 - (1.0 + k * (1.0 - tv * tv)) * policy.epsilon_tail);
    }
  }

  TEST_CASE("negative cutoff is rejected") {
    CHECK_THROWS_AS(kruskal_vacuum(SqueezingParam(0.5), -1), ContractViolation);
  }
}

TEST_SUITE("reduced_state") {
  TEST_CASE("Alice marginal of the lifted Bell state is I/2") {
    const SqueezingParam t(0.5);
    const long n = choose_cutoff(t);
    const DensityOperator full = DensityOperator::projector(lifted_bell(t, n));
    const DensityOperator alice = partial_trace_last(partial_trace_last(full));
    CHECK(alice.dims() == Dims{2});
    CHECK(max_abs(alice.entries() - 0.5 * Matrix::Identity(2, 2)) < 1e-10);
  }

  TEST_CASE("zero temperature is the Bell projector") {
    const DensityOperator rho = reduced_state(SqueezingParam(0.0), 0);
    CHECK(rho.dims() == Dims{2, 2});
    Matrix bell = Matrix::Zero(4, 4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    CHECK(hs_distance_sq(rho.op(), Operator(bell, {2, 2})) < 1e-14);
  }

  TEST_CASE("entries at t = 0.5 follow the analytic trace over region II") {
    const SqueezingParam t(0.5);
    const long n = choose_cutoff(t);
    const DensityOperator rho = reduced_state(t, n);
    const auto d = static_cast<Eigen::Index>(n + 2);
    CHECK(rho.dims() == Dims{2, static_cast<std::size_t>(d)});
    CHECK(rho.entries()(1, 1).real() == doctest::Approx(0.09375).epsilon(1e-14));
    const double s = 0.25;
    for (Eigen::Index k = 0; k <= 5; ++k) {
      const double diag = 0.5 * (1 - s) * std::pow(s, static_cast<double>(k));
      const double cross = 0.5 * std::pow(1 - s, 1.5) *
                           std::sqrt(static_cast<double>(k + 1)) *
                           std::pow(s, static_cast<double>(k));
      CHECK(rho.entries()(k, k).real() == doctest::Approx(diag).epsilon(1e-14));
      CHECK(rho.entries()(k, d + k + 1).real() ==
            doctest::Approx(cross).epsilon(1e-14));
      CHECK(rho.entries()(k, d + k + 1).imag() == 0.0);
    }
    CHECK(rho.trace() == doctest::Approx(1.0 - rho.tail_defect()).epsilon(1e-14));
  }

  TEST_CASE("PSD up to truncation noise and maximally mixed marginal") {
    for (int k = 1; k <= 9; ++k) {
      const SqueezingParam t(0.1 * k);
      const DensityOperator rho = reduced_state(t, choose_cutoff(t));
      CAPTURE(k);
      CHECK(rho.min_eigenvalue() >= DensityOperator::kEigenvalueFloor);
      CHECK_NOTHROW(rho.validate());
      const Eigen::Matrix2cd a = alice_marginal(rho);
      CHECK(std::abs(a(0, 1)) < 1e-12);
      CHECK(std::abs(a(1, 0)) < 1e-12);
      CHECK(std::abs(a(0, 0).real() - 0.5) <= rho.tail_defect() + 1e-14);
      CHECK(std::abs(a(1, 1).real() - 0.5) <= rho.tail_defect() + 1e-14);
    }
  }
}
