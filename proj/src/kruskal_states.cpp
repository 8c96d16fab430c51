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

#include "atmomin/kruskal_states.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "atmomin/error.hpp"

namespace atmomin {
namespace {

void require_cutoff(long n) {
  if (n < 0) throw ContractViolation("cutoff must be >= 0");
}

std::size_t as_size(long n) { return static_cast<std::size_t>(n); }

}  // namespace

SqueezingParam::SqueezingParam(double t) : t_(t) {
  if (!(t >= 0.0 && t < 1.0)) {
    throw DomainError("squeezing parameter must lie in [0, 1), got " +
                      std::to_string(t));
  }
}

double SqueezingParam::cosh_r() const { return 1.0 / std::sqrt(1.0 - t_ * t_); }

const char* to_string(ExponentConvention c) noexcept {
  return c == ExponentConvention::HalfExponent ? "half" : "full";
}

SqueezingParam squeezing_from_temperature(double temperature,
                                          const ModeSpec& mode) {
  if (!(mode.omega > 0.0) || !std::isfinite(mode.omega)) {
    throw DomainError("mode frequency must be positive and finite");
  }
  if (!std::isfinite(temperature)) {
    throw DomainError("temperature must be finite");
  }
  if (temperature < 0.0) {
    throw DomainError("temperature must be >= 0, got " +
                      std::to_string(temperature));
  }
  if (temperature == 0.0) return SqueezingParam(0.0);
  const double scale =
      mode.convention == ExponentConvention::HalfExponent ? 2.0 : 1.0;
  return SqueezingParam(std::exp(-mode.omega / (scale * temperature)));
}

long choose_cutoff(const SqueezingParam& t, const CutoffPolicy& policy) {
  if (!(policy.epsilon_tail > 0.0 && policy.epsilon_tail < 1.0)) {
    throw ContractViolation("epsilon_tail must lie in (0, 1)");
  }
  if (policy.n_max_cap < 0) throw ContractViolation("cutoff cap must be >= 0");
  const double tv = t.value();
  if (tv == 0.0) return 0;

  const double s = tv * tv;
  const auto tail_at = [s](double n) { return std::pow(s, n + 1.0); };

  // Tail bound s^(N+1) <= eps; the log estimate is refined by direct checks.
  double estimate =
      std::ceil(std::log(policy.epsilon_tail) / std::log(s)) - 1.0;
  if (estimate < 0.0) estimate = 0.0;
  if (estimate > static_cast<double>(std::numeric_limits<long>::max() / 4)) {
    throw TruncationError("cutoff estimate overflows", std::numeric_limits<long>::max(),
                          tail_at(static_cast<double>(policy.n_max_cap)));
  }
  long n = static_cast<long>(estimate);
  while (tail_at(static_cast<double>(n)) > policy.epsilon_tail) ++n;
  while (n > 0 && tail_at(static_cast<double>(n - 1)) <= policy.epsilon_tail) --n;

  if (n > policy.n_max_cap) {
    const double achievable = tail_at(static_cast<double>(policy.n_max_cap));
    throw TruncationError("cutoff " + std::to_string(n) + " for t=" +
                              std::to_string(tv) + " exceeds cap " +
                              std::to_string(policy.n_max_cap) +
                              "; achievable epsilon " +
                              std::to_string(achievable),
                          n, achievable);
  }
  return n;
}

double vacuum_tail(const SqueezingParam& t, long n) {
  require_cutoff(n);
  const double s = t.value() * t.value();
  return std::pow(s, static_cast<double>(n + 1));
}

double excited_tail(const SqueezingParam& t, long n) {
  require_cutoff(n);
  // (1-s)^2 sum_{m>=K} (m+1) s^m = s^K (1 + K (1-s)),  K = N+1
  const double s = t.value() * t.value();
  const double k = static_cast<double>(n + 1);
  return std::pow(s, k) * (1.0 + k * (1.0 - s));
}

PureState kruskal_vacuum(const SqueezingParam& t, long n) {
  require_cutoff(n);
  const std::size_t dim_i = as_size(n) + 2;
  const std::size_t dim_ii = as_size(n) + 1;
  const double tv = t.value();
  const double norm = std::sqrt(1.0 - tv * tv);

  Vector amps = Vector::Zero(static_cast<Eigen::Index>(dim_i * dim_ii));
  double power = 1.0;
  for (std::size_t k = 0; k <= as_size(n); ++k) {
    amps(static_cast<Eigen::Index>(k * dim_ii + k)) = norm * power;
    power *= tv;
  }
  return PureState(std::move(amps), Dims{dim_i, dim_ii}, vacuum_tail(t, n));
}

PureState kruskal_excited(const SqueezingParam& t, long n) {
  require_cutoff(n);
  const std::size_t dim_i = as_size(n) + 2;
  const std::size_t dim_ii = as_size(n) + 1;
  const double tv = t.value();
  const double prefactor = 1.0 - tv * tv;

  Vector amps = Vector::Zero(static_cast<Eigen::Index>(dim_i * dim_ii));
  double power = 1.0;
  for (std::size_t k = 0; k <= as_size(n); ++k) {
    const double coeff =
        prefactor * std::sqrt(static_cast<double>(k + 1)) * power;
    amps(static_cast<Eigen::Index>((k + 1) * dim_ii + k)) = coeff;
    power *= tv;
  }
  return PureState(std::move(amps), Dims{dim_i, dim_ii}, excited_tail(t, n));
}

PureState lifted_bell(const SqueezingParam& t, long n) {
  const PureState vac = kruskal_vacuum(t, n);
  const PureState exc = kruskal_excited(t, n);
  const Eigen::Index block = vac.amplitudes().size();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  Vector amps(2 * block);
  amps.head(block) = inv_sqrt2 * vac.amplitudes();
  amps.tail(block) = inv_sqrt2 * exc.amplitudes();

  Dims dims{2};
  dims.insert(dims.end(), vac.dims().begin(), vac.dims().end());
  const double tail = 0.5 * (vac.tail_defect() + exc.tail_defect());
  return PureState(std::move(amps), std::move(dims), tail);
}

DensityOperator reduced_state(const SqueezingParam& t, long n) {
  return partial_trace_last(lifted_bell(t, n));
}

}  // namespace atmomin
