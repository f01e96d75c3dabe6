#pragma once

#include <stdexcept>
#include <string>

namespace filling {

/// Argument outside the domain of a hyperbolic-trigonometric function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inadmissible input (bad gluing word, non-filling map, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant did not hold. Always a bug or a counterexample.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace filling
