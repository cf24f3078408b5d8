// Copyright (c) 2026 the hilmod developers
// SPDX-License-Identifier: Apache-2.0

#ifndef HILMOD_ERRORS_HPP
#define HILMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hilmod {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Shape mismatch: algebra dimension, truncation length, or index range.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Input value outside the operation's domain (non-unit vector,
/// non-Hermitian matrix, non-orthogonal family, ...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// A stated precondition does not hold (e.g. ||a|| <= delta, ||z|| <= 1).
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Operation is not defined on the given algebra kind; the commutative
/// refusal of the state/unitary selection lands here.
class UnsupportedAlgebraError : public DomainError {
public:
  explicit UnsupportedAlgebraError(const std::string& what) : DomainError(what) {}
};

/// Weight sequence with no mass under the given state.
class DegenerateWeightsError : public DomainError {
public:
  explicit DegenerateWeightsError(const std::string& what) : DomainError(what) {}
};

/// Iterative kernel failed to converge within its budget. Carries the last
/// residual so callers can report how close it got.
class NumericError : public Error {
public:
  NumericError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

/// Invalid experiment configuration (bad field, out-of-range parameter).
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// The witness construction's dichotomy: the operator has no compactness
/// deficiency at the probed horizon, so no witness sequence exists.
class CompactAtHorizonError : public PreconditionError {
public:
  CompactAtHorizonError(const std::string& what, double delta)
      : PreconditionError(what), delta_(delta) {}
  double delta() const noexcept { return delta_; }

private:
  double delta_;
};

/// The truncation ran out of coordinates before the requested number of
/// witness steps could be completed.
class HorizonTooSmallError : public PreconditionError {
public:
  explicit HorizonTooSmallError(const std::string& what) : PreconditionError(what) {}
};

}  // namespace hilmod

#endif  // HILMOD_ERRORS_HPP
