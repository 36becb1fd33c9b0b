#pragma once

#include <stdexcept>
#include <string>

namespace eulercalc {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input data violates a structural precondition (duplicate vertices, bad ids, ...).
class MalformedInput : public Error {
  public:
    using Error::Error;
};

/// Operands live on different spaces.
class SpaceMismatch : public Error {
  public:
    using Error::Error;
};

class NotLocallyClosed : public Error {
  public:
    using Error::Error;
};

/// A vertex assignment does not induce a map of spaces.
class InvalidMap : public Error {
  public:
    using Error::Error;
};

class UnsupportedMap : public Error {
  public:
    using Error::Error;
};

/// An open/closed decomposition or an open cover is not what the operation requires.
class InvalidDecomposition : public Error {
  public:
    using Error::Error;
};

/// Nearby-cycle values depend on the choice of generic cell.
class NonGenericModel : public Error {
  public:
    using Error::Error;
};

class CoverTooLarge : public Error {
  public:
    using Error::Error;
};

class InvalidAction : public Error {
  public:
    using Error::Error;
};

/// Two independent computation routes disagreed.
class InternalInconsistency : public Error {
  public:
    using Error::Error;
};

class ArithmeticOverflow : public Error {
  public:
    using Error::Error;
};

}  // namespace eulercalc
