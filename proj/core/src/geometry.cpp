#include "truckdrone/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "truckdrone/errors.hpp"

namespace truckdrone {

void validate(const Drone& drone) {
  if (!(drone.speed > 1.0) || !std::isfinite(drone.speed)) {
    throw InvalidParameters("drone speed must be a finite value > 1, got " +
                            std::to_string(drone.speed));
  }
  if (!(drone.range > 0.0) || !std::isfinite(drone.range)) {
    throw InvalidParameters("drone range must be a finite value > 0, got " +
                            std::to_string(drone.range));
  }
}

Envelope reach_envelope(const Drone& drone) {
  validate(drone);
  const double v = drone.speed;
  const double r = drone.range;
  return Envelope{
      .major_radius = r / 2.0,
      .minor_radius = r / (2.0 * v) * std::sqrt(v * v - 1.0),
      .focal_gap = r / v,
  };
}

std::optional<StartWindow> start_window(const DeliveryPoint& point,
                                        const Drone& drone) {
  const Envelope env = reach_envelope(drone);
  const double height = std::abs(point.y);
  if (height > env.minor_radius) return std::nullopt;

  const double ratio = height / env.minor_radius;
  const double half_width =
      env.major_radius * std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
  const double center = point.x - env.focal_gap / 2.0;

  StartWindow w;
  w.half_width = half_width;
  w.es = center - half_width;
  w.ls = center + half_width;
  w.er = w.es + env.focal_gap;
  w.lr = w.ls + env.focal_gap;
  return w;
}

double return_position(double launch, const DeliveryPoint& point,
                       const Drone& drone) {
  const auto window = start_window(point, drone);
  if (!window) return kInfeasible;
  return return_position(launch, point, *window, drone);
}

double return_position(double launch, const DeliveryPoint& point,
                       const StartWindow& window, const Drone& drone) {
  if (launch > window.ls) return kInfeasible;
  if (launch < window.es) return window.er;

  // Closed-form meeting point, evaluated with the launch moved to the
  // origin. With dx = x - s and a = |[s,0],d| the quadratic's positive
  // root reduces to s + 2(av - dx) / (v^2 - 1). For dx > 0 the difference
  // av - dx is rewritten as (a^2 v^2 - dx^2) / (av + dx) to avoid
  // cancellation.
  const double v = drone.speed;
  const double v2m1 = v * v - 1.0;
  const double dx = point.x - launch;
  const double a = std::hypot(dx, point.y);
  double gain;
  if (dx > 0.0) {
    gain = (point.y * point.y * v * v + dx * dx * v2m1) / (a * v + dx);
  } else {
    gain = a * v - dx;
  }
  return launch + 2.0 * std::max(0.0, gain) / v2m1;
}

double round_trip_time(double launch, const DeliveryPoint& point,
                       const Drone& drone) {
  const double ret = return_position(launch, point, drone);
  if (ret == kInfeasible) return kInfeasible;
  return ret - launch;
}

double vertical_delivery_time(double offset, double height, double speed) {
  return 2.0 * (speed * std::hypot(offset, height) + offset) /
         (speed * speed - 1.0);
}

double flight_length(double launch, const DeliveryPoint& point,
                     double recovery) {
  return std::hypot(point.x - launch, point.y) +
         std::hypot(recovery - point.x, point.y);
}

}  // namespace truckdrone
