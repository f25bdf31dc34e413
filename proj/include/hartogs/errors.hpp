#pragma once

#include <stdexcept>
#include <string>

namespace hartogs {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation point lies outside the region where a quantity is defined
/// (x outside [0, x0), a point not strictly inside D_F, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Profile violates a structural requirement (F(x) <= 0, bad table, ...).
class InvalidProfileError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// B vanishes (or nearly so); the inverse metric and the coefficient
/// functions divided by B are undefined.
class SingularCoefficientError : public Error {
 public:
  using Error::Error;
};

/// A finite-difference stencil left the domain of the sampled field.
class StepTooLargeError : public Error {
 public:
  using Error::Error;
};

class NumericFailureError : public Error {
 public:
  using Error::Error;
};

}  // namespace hartogs
