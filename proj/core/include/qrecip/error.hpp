#pragma once

#include <stdexcept>
#include <string>

namespace qrecip {

// Base of everything the library throws on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition was violated (bad modulus, wrong parity, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The arguments of a symbol or an inverse share a non-unit factor.
class NotCoprimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A discrete logarithm over the fourth roots of unity has no solution.
class NotAPowerError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An intermediate value would leave the supported integer width.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Unknown check identifier or malformed check parameters.
class CheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace qrecip
