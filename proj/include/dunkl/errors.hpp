#pragma once

#include <stdexcept>
#include <string>

namespace dunkl {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation requested at a point where an operator is singular
/// (a reflection axis, or r = 0 for the radial operators).
class SingularityError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Parameters that do not label a positive discrete-series representation.
class RepresentationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Closed-form expression evaluated at its pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace dunkl
