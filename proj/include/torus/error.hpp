#pragma once

#include <stdexcept>
#include <string>

namespace torus {

/// Malformed textual input (CLI exit code 2).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input outside what an operation supports (CLI exit code 3).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A rational whose factorization is not certified by trial division.
class UnfactorableError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace torus
