#ifndef TRUCKDRONE_SRC_PREPARED_HPP
#define TRUCKDRONE_SRC_PREPARED_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "truckdrone/geometry.hpp"
#include "truckdrone/model.hpp"

namespace truckdrone::detail {

// A point with its start window cached for the solvers' inner loops.
struct PreparedPoint {
  std::size_t index = 0;
  DeliveryPoint point;
  std::optional<StartWindow> window;
};

inline std::vector<PreparedPoint> prepare(const Instance& inst) {
  std::vector<PreparedPoint> out;
  out.reserve(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    out.push_back({i, inst.point(i), start_window(inst.point(i), inst.drone())});
  }
  return out;
}

// Same contract as truckdrone::recover().
inline double recover(double launch, const PreparedPoint& p,
                      const Drone& drone, double slack) {
  if (!p.window || launch > p.window->ls + slack) return kInfeasible;
  return return_position(std::min(launch, p.window->ls), p.point, *p.window,
                         drone);
}

}  // namespace truckdrone::detail

#endif  // TRUCKDRONE_SRC_PREPARED_HPP
