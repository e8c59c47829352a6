#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dioph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A partial-quotient stream ran out before the requested number of terms.
class StreamExhausted : public Error {
 public:
  using Error::Error;
};

// A rounding or comparison decision could not be certified within max_depth.
class PrecisionExhausted : public Error {
 public:
  PrecisionExhausted(const std::string& what, std::uint64_t x0)
      : Error(what), x0_(x0) {}
  std::uint64_t x0() const noexcept { return x0_; }

 private:
  std::uint64_t x0_;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class DependentVectors : public Error {
 public:
  using Error::Error;
};

class BadDegree : public Error {
 public:
  using Error::Error;
};

class HorizonExceeded : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class BadLambda : public DomainError {
 public:
  using DomainError::DomainError;
};

class ThetaTooSmall : public DomainError {
 public:
  using DomainError::DomainError;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class DegenerateDelta : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (specs, word ids, CSV rows, numbers).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace dioph
