#pragma once

#include <stdexcept>
#include <string>

namespace hh {

// Argument outside the mathematical domain of an operation (a >= b, p <= 1, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// An evaluator returned NaN or infinity.
class EvaluationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Iterative refinement ran out of depth or subintervals.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A theorem's class hypothesis (convexity, quasi-convexity, monotonicity) was refuted.
class HypothesisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace hh
