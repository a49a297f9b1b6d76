#pragma once

#include <stdexcept>
#include <string>

namespace fracsemi {

/// Adaptive quadrature ran out of its evaluation budget before meeting its tolerance.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An iterative method (eigensolver, CG, epsilon-halving) failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A field's declared decay does not place it in the weighted L1 space the operator needs.
class MembershipError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace fracsemi
