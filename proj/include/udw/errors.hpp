// SPDX-License-Identifier: Apache-2.0
//
// Exception hierarchy shared by all udw modules.  The CLI maps these to
// exit codes: UsageError and DomainError (including RigidityError) are the
// caller's fault -> 2; numerical failures (AccuracyError, SpectrumError,
// plain Error) -> 1.

#ifndef UDW_ERRORS_HPP
#define UDW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace udw {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside the mathematical domain of an operation (wrong wedge,
/// nonpositive argument, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// Born-rigidity bound violated: the rear wall of the accelerated cavity
/// would cross the future Rindler horizon (requires a*L < 2 for midpoint
/// geometry).
class RigidityError : public DomainError {
 public:
  explicit RigidityError(const std::string& what) : DomainError(what) {}
};

/// A numerical routine could not reach its accuracy contract.  Carries the
/// best available absolute error estimate.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double err_est)
      : Error(what), err_est_(err_est) {}
  double err_est() const noexcept { return err_est_; }

 private:
  double err_est_;
};

/// Eigenvalue search failed its completeness check (missed or spurious
/// roots relative to the asymptotic mode count).
class SpectrumError : public Error {
 public:
  explicit SpectrumError(const std::string& what) : Error(what) {}
};

/// Caller misuse: bad configuration files, unknown presets, mismatched
/// scenario kinds, ...
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace udw

#endif  // UDW_ERRORS_HPP
