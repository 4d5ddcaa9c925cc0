#pragma once

#include <stdexcept>
#include <string>

namespace fracjump {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments: non-prime modulus, mismatched moduli, bad dimensions,
// non-monic moduli and the like.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Text payload (polynomial, matrix, vector) could not be parsed.
class ParseError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Mathematically ill-posed request, e.g. the order of a non-unit.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An enumeration or factoring budget was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A checked construction was refused, e.g. building a fractional jump
// from an automorphism that does not act transitively.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Every piece denominator of a fractional jump vanished at the input point.
class NotTransitiveCompatible : public Error {
 public:
  using Error::Error;
};

// Direct projective iteration never came back to the affine chart.
class TrappedAtInfinity : public Error {
 public:
  using Error::Error;
};

}  // namespace fracjump
