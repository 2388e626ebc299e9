#include "truckdrone/proper.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace truckdrone {
namespace {

double cross(const DeliveryPoint& o, const DeliveryPoint& a,
             const DeliveryPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// The triangle spanned on the axis by a point's earliest launch and latest
// recovery, with the point as apex.
bool in_launch_triangle(const DeliveryPoint& other, const DeliveryPoint& apex,
                        const StartWindow& w, double slack) {
  return in_triangle(other, DeliveryPoint{w.es, 0.0}, apex,
                     DeliveryPoint{w.lr, 0.0}, slack);
}

bool nested_in(const StartWindow& inner, const StartWindow& outer,
               double slack) {
  return outer.es <= inner.es + slack && inner.ls <= outer.ls + slack;
}

}  // namespace

bool in_triangle(const DeliveryPoint& p, const DeliveryPoint& a,
                 const DeliveryPoint& b, const DeliveryPoint& c,
                 double slack) {
  const double area = cross(a, b, c);
  if (area == 0.0) return false;
  const double orient = area > 0.0 ? 1.0 : -1.0;
  const DeliveryPoint* corners[3] = {&a, &b, &c};
  for (int e = 0; e < 3; ++e) {
    const DeliveryPoint& u = *corners[e];
    const DeliveryPoint& w = *corners[(e + 1) % 3];
    const double length = std::hypot(w.x - u.x, w.y - u.y);
    if (orient * cross(u, w, p) / length < -slack) return false;
  }
  return true;
}

bool proper_pair(const DeliveryPoint& a, const DeliveryPoint& b,
                 const Drone& drone, double slack) {
  const auto wa = start_window(a, drone);
  const auto wb = start_window(b, drone);
  if (!wa || !wb) return false;
  return !in_launch_triangle(b, a, *wa, slack) &&
         !in_launch_triangle(a, b, *wb, slack) &&
         !nested_in(*wa, *wb, slack) && !nested_in(*wb, *wa, slack);
}

ProperReport check_proper(const Instance& inst, double tol) {
  const double slack = tol * inst.scale();
  const std::size_t n = inst.size();
  std::vector<std::optional<StartWindow>> windows(n);
  ProperReport report;
  for (std::size_t i = 0; i < n; ++i) {
    windows[i] = start_window(inst.point(i), inst.drone());
    if (!windows[i]) report.out_of_band.push_back(i);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!windows[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !windows[j]) continue;
      if (in_launch_triangle(inst.point(j), inst.point(i), *windows[i],
                             slack)) {
        report.triangle_violations.emplace_back(i, j);
      }
      if (nested_in(*windows[i], *windows[j], slack)) {
        report.nesting_violations.emplace_back(i, j);
      }
    }
  }

  report.is_proper = report.out_of_band.empty() &&
                     report.triangle_violations.empty() &&
                     report.nesting_violations.empty();
  return report;
}

bool interval_order_check(const Instance& inst) {
  const std::size_t n = inst.size();
  std::vector<StartWindow> windows;
  windows.reserve(n);
  for (const DeliveryPoint& p : inst.points()) {
    const auto w = start_window(p, inst.drone());
    if (!w) return false;
    windows.push_back(*w);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(inst.point(i).x < inst.point(j).x)) continue;
      const StartWindow& a = windows[i];
      const StartWindow& b = windows[j];
      const bool disjoint = a.ls < b.es;
      const bool staggered = a.es < b.es && b.es <= a.ls && a.ls < b.ls;
      if (!disjoint && !staggered) return false;
    }
  }
  return true;
}

}  // namespace truckdrone
