#ifndef TRUCKDRONE_SOLVERS_HPP
#define TRUCKDRONE_SOLVERS_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "truckdrone/model.hpp"
#include "truckdrone/proper.hpp"

namespace truckdrone {

inline constexpr std::size_t kDefaultExactBudget = 10;

/**
 * Greedy scheduler. Sweeps the truck left to right and, at each launch
 * abscissa, serves the reachable point with the earliest recovery.
 * O(n^2) recovery evaluations; serves at least half of an optimum.
 */
Schedule solve_greedy(const Instance& inst, double tol = kDefaultTolerance);

/// Thrown by solve_dp_proper when the instance must be proper and is not.
class NotProper : public std::runtime_error {
 public:
  explicit NotProper(ProperReport report);
  const ProperReport& report() const { return report_; }

 private:
  ProperReport report_;
};

/**
 * Earliest-completion table over x-sorted points.
 *
 * completion[i-1][j] is the earliest recovery after exactly i deliveries
 * chosen among the first j+1 points (by rank) that end at rank j;
 * kInfeasible when no such schedule exists. parent[i-1][j] is the rank of
 * the previous delivery, or kNoParent for i == 1. rank_to_point maps
 * ranks back to instance indices.
 */
struct DpTable {
  static constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

  std::vector<std::size_t> rank_to_point;
  std::vector<std::vector<double>> completion;
  std::vector<std::vector<std::size_t>> parent;
};

DpTable build_dp_table(const Instance& inst, double tol = kDefaultTolerance);

/**
 * Optimal monotone schedule for proper instances in O(n^3).
 *
 * With require_proper set, a non-proper instance throws NotProper. With
 * it cleared the same recurrence runs as a heuristic and carries no
 * optimality guarantee.
 */
Schedule solve_dp_proper(const Instance& inst, bool require_proper = true,
                         double tol = kDefaultTolerance);

/**
 * Exhaustive search over all orders of all subsets, pruning an order as
 * soon as its prefix cannot be packed. Returns a longest schedule; ties go
 * to the smaller completion, then to the lexicographically smaller order.
 *
 * Throws BudgetExceeded when the instance has more than max_points points.
 */
Schedule solve_exact(const Instance& inst,
                     std::size_t max_points = kDefaultExactBudget,
                     double tol = kDefaultTolerance);

}  // namespace truckdrone

#endif  // TRUCKDRONE_SOLVERS_HPP
