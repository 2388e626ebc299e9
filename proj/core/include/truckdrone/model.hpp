#ifndef TRUCKDRONE_MODEL_HPP
#define TRUCKDRONE_MODEL_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "truckdrone/geometry.hpp"

namespace truckdrone {

inline constexpr double kDefaultTolerance = 1e-9;

/**
 * One problem instance: drone parameters, the truck's starting abscissa,
 * and a multiset of delivery points (duplicates allowed, each with its
 * own index). Validated on construction and immutable afterwards.
 */
class Instance {
 public:
  Instance(Drone drone, double truck_start, std::vector<DeliveryPoint> points);

  const Drone& drone() const { return drone_; }
  double speed() const { return drone_.speed; }
  double range() const { return drone_.range; }
  double truck_start() const { return truck_start_; }
  std::span<const DeliveryPoint> points() const { return points_; }
  const DeliveryPoint& point(std::size_t i) const { return points_.at(i); }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  /// max(1, R, |s0|, every |x|, |y|); multiplies relative tolerances.
  double scale() const { return scale_; }

 private:
  Drone drone_;
  double truck_start_;
  std::vector<DeliveryPoint> points_;
  double scale_;
};

struct Delivery {
  std::size_t point = 0;
  double start = 0.0;
  double ret = 0.0;  // recovery abscissa, derived from start

  friend bool operator==(const Delivery&, const Delivery&) = default;
};

struct Schedule {
  std::vector<Delivery> deliveries;

  std::size_t size() const { return deliveries.size(); }
  bool empty() const { return deliveries.empty(); }
  std::vector<std::size_t> order() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

enum class ViolationReason {
  kStartBeforeTruck,
  kStartAfterLatest,
  kOverlapWithPrevious,
  kOutOfBand,
  kDuplicatePoint,
};

std::string_view to_string(ViolationReason reason);

struct Violation {
  std::size_t entry = 0;
  ViolationReason reason = ViolationReason::kStartBeforeTruck;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;
  double completion = 0.0;
};

/// Recovery abscissa for a launch at `launch`, allowing the launch to sit
/// up to `slack` past ls(point). kInfeasible beyond that.
double recover(double launch, const DeliveryPoint& point, const Drone& drone,
               double slack);

/**
 * Checks a schedule against the instance. Start times and gaps are
 * compared with tolerance `tol * inst.scale()`. Recovery abscissas are
 * recomputed from the starts; the stored ret fields are ignored.
 *
 * Throws InvalidSchedule on an out-of-range point index.
 */
FeasibilityReport verify_schedule(const Instance& inst, const Schedule& sched,
                                  double tol = kDefaultTolerance);

/// Recovery abscissa of the last delivery (truck start when empty).
/// Throws InfeasibleSchedule when verify_schedule rejects the schedule.
double schedule_completion(const Instance& inst, const Schedule& sched,
                           double tol = kDefaultTolerance);

/**
 * Serves `order` as early as possible: each launch is the later of the
 * previous recovery (truck start for the first) and es of the point.
 * Returns nullopt when some launch falls past ls, or a point is out of
 * band. For a fixed order this minimizes every recovery abscissa.
 *
 * Throws InvalidSchedule on out-of-range or repeated indices.
 */
std::optional<Schedule> earliest_start_pack(const Instance& inst,
                                            std::span<const std::size_t> order,
                                            double tol = kDefaultTolerance);

}  // namespace truckdrone

#endif  // TRUCKDRONE_MODEL_HPP
