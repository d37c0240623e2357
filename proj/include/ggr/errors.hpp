#pragma once

#include <stdexcept>
#include <string>

namespace ggr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (non-finite angle, zero vector,
/// bad sample count, out-of-range triangle parameter).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Proportion with a zero-norm denominator.
class DivisionDomainError : public Error {
 public:
  using Error::Error;
};

/// Root multiset does not split into two real roots and a conjugate pair.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

/// a1 + a2 = 0, so the direction of the sum is undefined.
class DegenerateSumError : public Error {
 public:
  using Error::Error;
};

/// Unit-triangle parameters that collapse a side to zero length.
class DegenerateParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace ggr
