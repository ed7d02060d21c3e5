#pragma once

#include <stdexcept>
#include <string>

namespace qlab {

// Operands live in different variable rings, or a substitution leaves a
// variable unmapped.
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Series inversion of a polynomial whose constant term is not a unit, or
// that has no grading under which the inversion terminates.
struct NonInvertibleError : std::domain_error {
  using std::domain_error::domain_error;
};

// An infinite product or sum that does not stabilize under the truncation.
struct DivergenceError : std::domain_error {
  using std::domain_error::domain_error;
};

// Input outside an operation's domain (gap violation, non-odd part, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Missing or invalid identity parameters.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace qlab
