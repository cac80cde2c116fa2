#pragma once

#include <stdexcept>
#include <string>

namespace dagger {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the inputs was violated (zero where nonzero is required,
// non-prime modulus, algebra mismatch, non-order passed as an order, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An integer could not be factored completely within the configured
// trial-division bound, so its square-free part cannot be certified.
class FactorizationError : public Error {
 public:
  using Error::Error;
};

// A search exceeded its work budget before reaching a conclusion.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A mathematical guarantee did not hold; indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dagger
