#pragma once

#include <stdexcept>
#include <string>

namespace lefcorr {

/// Base class for every error raised by the library. The CLI maps these to
/// exit code 1 and prints what().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A projection of the correspondence is not a finite covering
/// (a vanishing determinant or a zero multiplier).
class NotACovering : public Error {
 public:
  using Error::Error;
};

/// The correspondence does not meet the diagonal transversally, so fixed
/// points are not isolated.
class NonTransversal : public Error {
 public:
  using Error::Error;
};

class MultiplierNotInRing : public Error {
 public:
  using Error::Error;
};

/// A pairing matrix between complementary degrees is singular.
class PoincareDualityFailure : public Error {
 public:
  using Error::Error;
};

class DegenerateEigenvalues : public Error {
 public:
  using Error::Error;
};

/// Eigenvalues are not in Q(i); callers may retry in floating mode.
class IrrationalEigenvalues : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A value violates a documented precondition (for example Im tau <= 0).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace lefcorr
