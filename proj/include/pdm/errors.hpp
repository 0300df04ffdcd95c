#pragma once

#include <stdexcept>
#include <string>

namespace pdm {

// A caller-supplied profile callable failed to evaluate.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A formula was evaluated at a point where one of its terms is singular.
class SingularPointError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Quadrature did not reach the requested tolerance before the panel cap.
// Carries the best estimate and the tolerance actually achieved.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best, double achieved)
      : std::runtime_error(what), best_estimate(best), achieved_tolerance(achieved) {}

  double best_estimate;
  double achieved_tolerance;
};

// A Sturm bisection bracket stopped containing its eigenvalue. The count is
// monotone by construction, so this indicates an internal bug.
class BracketError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pdm
