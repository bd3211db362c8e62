#pragma once

#include <stdexcept>
#include <string>

namespace surprise {

// Rejected at construction: a kernel, lottery or tree that breaks its invariants.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A scenario or analysis parameter outside its documented domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Bracketing failed: the function has no sign change on the search interval.
class NoRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace surprise
