#pragma once

#include <stdexcept>
#include <string>

namespace pointint {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or non-finite input values (failed constructor invariants,
/// out-of-range arguments).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The interaction region [-a, a] does not fit inside the box.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// gamma = 0 schedule requested with alpha + delta + 2 = 0 while
/// (alpha, delta) != (-1, -1).  Unreachable for exact SL(2,R) input;
/// guarded against tolerance-window parameters.
class DegenerateSchedule : public Error {
 public:
  using Error::Error;
};

/// A wave-number passed as an eigenvalue does not zero the secular function.
class NotAnEigenvalue : public Error {
 public:
  using Error::Error;
};

/// Root refinement or another numerical procedure failed to converge.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pointint
