#pragma once

#include <stdexcept>

namespace tspec {

// A quantity is undefined for the given input, e.g. b_f is not positive on
// the quadrature grid or a symbol fails the simple-loop conditions.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iterative routine did not reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tspec
