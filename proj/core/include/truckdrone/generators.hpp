#ifndef TRUCKDRONE_GENERATORS_HPP
#define TRUCKDRONE_GENERATORS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "truckdrone/model.hpp"

namespace truckdrone {

/// Uniform sampling of n points in [0, x_span] x band, y != 0.
Instance gen_random_band(std::size_t n, const Drone& drone, double x_span,
                         std::uint64_t seed, double truck_start = 0.0);

/// Random instance that passes check_proper. Throws GenerationError after
/// 10^4 rejected candidates.
Instance gen_random_proper(std::size_t n, const Drone& drone,
                           std::uint64_t seed, double truck_start = 0.0);

/**
 * A 3-Partition input: n = 3k positive integers with target T = sum / k.
 * The separation constant exponent defaults to 4, giving spacing
 * perturbation n^-6.
 */
struct ThreePartitionSpec {
  std::vector<std::int64_t> values;
  int exponent = 4;
};

struct ThreePartitionInstance {
  Instance instance;
  std::size_t k = 0;
  std::int64_t target = 0;
  double epsilon = 0.0;
  // Number of points a schedule must serve for a yes-answer (all of them).
  std::size_t expected_count = 0;
  // Index ranges of the A (y-axis), B (separator) and C (tail) point sets.
  std::size_t a_end = 0;
  std::size_t b_end = 0;
};

/**
 * Builds the scheduling instance of the 3-Partition reduction: speed T,
 * range 4T, truck start 2, the integers as points on the y-axis, k - 1
 * separator points and T + 1 tail points on the band edge.
 *
 * Throws GenerationError when the values do not form a valid spec.
 */
ThreePartitionInstance gen_three_partition(const ThreePartitionSpec& spec);

struct TightnessCertificate {
  std::size_t pairs = 0;
  std::size_t exact_count = 0;
  std::size_t greedy_count = 0;
  // "exact" when solve_exact confirmed the optimum, "witness" when a
  // full schedule was packed and verified instead.
  std::string certified_by;
  Schedule witness;
  Schedule greedy;
};

struct TightnessInstance {
  Instance instance;
  TightnessCertificate certificate;
};

/**
 * k pairs on which greedy serves exactly k points while all 2k can be
 * served. Odd points sit on the band edge; each even point opens earlier,
 * so greedy takes it and loses the odd one. The layout is found by a
 * bounded parameter search and certified before returning.
 *
 * Throws GenerationError when no certified layout is found.
 */
TightnessInstance gen_greedy_tightness(std::size_t k, const Drone& drone);

}  // namespace truckdrone

#endif  // TRUCKDRONE_GENERATORS_HPP
