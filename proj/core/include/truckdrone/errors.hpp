#ifndef TRUCKDRONE_ERRORS_HPP
#define TRUCKDRONE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace truckdrone {

/// Drone speed/range or instance data outside the model's domain.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A schedule that references points the instance does not have, or
/// repeats an index where the operation requires distinct indices.
class InvalidSchedule : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed schedule that violates the feasibility rules.
class InfeasibleSchedule : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exact solver refused an instance above its point budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An instance generator could not satisfy its contract.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace truckdrone

#endif  // TRUCKDRONE_ERRORS_HPP
