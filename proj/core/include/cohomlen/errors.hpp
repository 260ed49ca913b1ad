#pragma once

#include <stdexcept>
#include <string>

namespace cohomlen {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// An argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

/// Enumeration caps exceeded (too many variables, candidates, lattice points).
class ResourceError : public Error {
public:
  using Error::Error;
};

/// An internal cross-check failed. These are bugs or bad fits, never user errors.
class ConsistencyError : public Error {
public:
  using Error::Error;
};

class CertificateError : public Error {
public:
  using Error::Error;
};

class InsufficientData : public Error {
public:
  InsufficientData(std::size_t required, std::size_t available)
      : Error("insufficient data: need at least " + std::to_string(required) +
              " sequence values, have " + std::to_string(available)),
        required_(required) {}

  std::size_t required() const noexcept { return required_; }

private:
  std::size_t required_;
};

class NoFitFound : public Error {
public:
  using Error::Error;
};

}  // namespace cohomlen
