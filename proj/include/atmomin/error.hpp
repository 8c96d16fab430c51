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

#include <stdexcept>
#include <string>

namespace atmomin {

enum class ErrorKind {
  Contract,     // caller broke a precondition (shape, ordering, ranges)
  Domain,       // argument outside the mathematical domain
  Sizing,       // dense dimension above the configured maximum
  Truncation,   // required Fock cutoff above the configured cap
  Search,       // no bracket / no interior extremum
  Subcritical,  // negative Hartle-Hawking radicand
  Io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ContractViolation : public Error {
 public:
  explicit ContractViolation(const std::string& what)
      : Error(ErrorKind::Contract, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::Domain, what) {}
};

class SizingError : public Error {
 public:
  explicit SizingError(const std::string& what)
      : Error(ErrorKind::Sizing, what) {}
};

class SearchError : public Error {
 public:
  explicit SearchError(const std::string& what)
      : Error(ErrorKind::Search, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

/// The cutoff needed for the requested tail bound exceeds the cap.
/// `achievable_epsilon` is the vacuum tail left at the cap itself.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, long required_cutoff,
                  double achievable_epsilon)
      : Error(ErrorKind::Truncation, what),
        required_cutoff_(required_cutoff),
        achievable_epsilon_(achievable_epsilon) {}

  long required_cutoff() const noexcept { return required_cutoff_; }
  double achievable_epsilon() const noexcept { return achievable_epsilon_; }

 private:
  long required_cutoff_;
  double achievable_epsilon_;
};

/// Negative second radicand of the Hartle-Hawking profile at ratio `x` = r/r_H.
class SubcriticalError : public Error {
 public:
  SubcriticalError(const std::string& what, double x, double radicand)
      : Error(ErrorKind::Subcritical, what), x_(x), radicand_(radicand) {}

  double x() const noexcept { return x_; }
  double radicand() const noexcept { return radicand_; }

 private:
  double x_;
  double radicand_;
};

}  // namespace atmomin
