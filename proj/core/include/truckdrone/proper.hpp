#ifndef TRUCKDRONE_PROPER_HPP
#define TRUCKDRONE_PROPER_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "truckdrone/model.hpp"

namespace truckdrone {

using IndexPair = std::pair<std::size_t, std::size_t>;

/**
 * Outcome of the proper-instance test.
 *
 * triangle_violations holds (i, j) when point j lies in the closed
 * triangle [es_i,0], d_i, [lr_i,0]. nesting_violations holds (i, j) when
 * the start window of i is contained in the start window of j (equal
 * windows count). Both are sorted by (i, j).
 */
struct ProperReport {
  bool is_proper = true;
  std::vector<IndexPair> triangle_violations;
  std::vector<IndexPair> nesting_violations;
  std::vector<std::size_t> out_of_band;
};

ProperReport check_proper(const Instance& inst, double tol = kDefaultTolerance);

/// True when every pair with x_i < x_j has either disjoint windows
/// (ls_i < es_j) or staggered ones (es_i < es_j <= ls_i < ls_j).
bool interval_order_check(const Instance& inst);

/// Closed point-in-triangle test; `slack` widens every edge outward.
bool in_triangle(const DeliveryPoint& p, const DeliveryPoint& a,
                 const DeliveryPoint& b, const DeliveryPoint& c,
                 double slack = 0.0);

/// Pairwise properness of two in-band points, in both directions.
bool proper_pair(const DeliveryPoint& a, const DeliveryPoint& b,
                 const Drone& drone, double slack);

}  // namespace truckdrone

#endif  // TRUCKDRONE_PROPER_HPP
