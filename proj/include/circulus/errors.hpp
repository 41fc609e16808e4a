#pragma once

#include <stdexcept>
#include <string>

namespace circulus {

/// Root of every failure raised by the library. The CLI maps any Error to the
/// "domain" exit status; usage problems are detected before the library runs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByIntervalContainingZero : public DomainError {
 public:
  DivisionByIntervalContainingZero() : DomainError("division by an interval containing zero") {}
};

class NegativeRadicand : public DomainError {
 public:
  NegativeRadicand() : DomainError("square root of an interval with a negative lower end") {}
};

class PoleProximity : public DomainError {
 public:
  PoleProximity() : DomainError("tan argument is not bounded away from a pole") {}
};

class IllConditioned : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedSeed : public DomainError {
 public:
  explicit UnsupportedSeed(int n)
      : DomainError("unsupported seed polygon: " + std::to_string(n) + " sides") {}
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

class IndeterminateError : public Error {
 public:
  using Error::Error;
};

}  // namespace circulus
