// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef GWM_ERRORS_HPP
#define GWM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gwm {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument: outside the documented domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// zeta evaluated within 1e-12 of its pole at s = 1.
class PoleAtOne : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Bateman expansion requested outside its validity (|ln z| >= 2pi, or
/// s a positive integer where Gamma(1-s) has a pole).
class BatemanInvalid : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Term budget exhausted before the tail bound reached the target.
class ToleranceNotMet : public Error {
  public:
    using Error::Error;
};

/// Euler-Maclaurin remainder bound could not be evaluated.
class RemainderUnbounded : public Error {
  public:
    using Error::Error;
};

/// A complex series term crossed the principal branch cut.
class BranchError : public Error {
  public:
    using Error::Error;
};

/// Simulation horizon cannot certify the truncation target.
class HorizonTooSmall : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Root finder failed to converge (unreachable for the shipped brackets).
class ConvergenceFailure : public Error {
  public:
    using Error::Error;
};

}  // namespace gwm

#endif
