#ifndef TRUCKDRONE_GEOMETRY_HPP
#define TRUCKDRONE_GEOMETRY_HPP

#include <limits>
#include <optional>

namespace truckdrone {

/// Returned by return_position() when a launch cannot reach the point.
inline constexpr double kInfeasible = std::numeric_limits<double>::infinity();

/// A delivery target in the plane. The truck drives along y = 0, so a
/// valid delivery point has y != 0.
struct DeliveryPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const DeliveryPoint&, const DeliveryPoint&) = default;
};

/// Drone speed (truck speed is 1) and flying range per charge.
struct Drone {
  double speed = 0.0;
  double range = 0.0;
};

/// Throws InvalidParameters unless speed > 1 and range > 0.
void validate(const Drone& drone);

/**
 * Full-range reach ellipse of a drone launched from the moving truck.
 *
 * The foci are the launch and recovery abscissas, focal_gap apart.
 * Every point reachable on one charge lies on or inside it, so deliveries
 * are only possible inside the band |y| <= minor_radius.
 */
struct Envelope {
  double major_radius = 0.0;  // R / 2
  double minor_radius = 0.0;  // (R / 2v) * sqrt(v^2 - 1)
  double focal_gap = 0.0;     // R / v
};

Envelope reach_envelope(const Drone& drone);

/**
 * Launch and recovery abscissas for a single delivery point.
 *
 * Launching anywhere in [es, ls] reaches the point within range; the
 * full-range flights at either end recover at er = es + R/v and
 * lr = ls + R/v. half_width is the horizontal half-extent of the reach
 * ellipse at the point's height.
 */
struct StartWindow {
  double es = 0.0;
  double ls = 0.0;
  double er = 0.0;
  double lr = 0.0;
  double half_width = 0.0;
};

/// Start window of `point`, or nullopt when the point lies outside the band.
std::optional<StartWindow> start_window(const DeliveryPoint& point,
                                        const Drone& drone);

/**
 * Abscissa at which the drone meets the truck again after leaving it at
 * `launch` and delivering to `point`.
 *
 * Launches before es(point) wait on the truck until es and recover at er.
 * Launches after ls(point), and out-of-band points, yield kInfeasible.
 */
double return_position(double launch, const DeliveryPoint& point,
                       const Drone& drone);

/// Same, with the point's start window already computed.
double return_position(double launch, const DeliveryPoint& point,
                       const StartWindow& window, const Drone& drone);

/// return_position(launch, ...) - launch; kInfeasible when infeasible.
double round_trip_time(double launch, const DeliveryPoint& point,
                       const Drone& drone);

/// Closed-form round trip for a point at height `height` that the truck
/// has already passed by `offset` (offset >= 0): 2(v*hypot(offset, height)
/// + offset) / (v^2 - 1).
double vertical_delivery_time(double offset, double height, double speed);

/// Length of the flight [launch,0] -> point -> [recovery,0].
double flight_length(double launch, const DeliveryPoint& point,
                     double recovery);

}  // namespace truckdrone

#endif  // TRUCKDRONE_GEOMETRY_HPP
