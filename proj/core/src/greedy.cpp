#include <algorithm>
#include <cmath>
#include <vector>

#include "prepared.hpp"
#include "truckdrone/solvers.hpp"

namespace truckdrone {

Schedule solve_greedy(const Instance& inst, double tol) {
  const double slack = tol * inst.scale();
  const Drone& drone = inst.drone();
  double clock = inst.truck_start();

  // Pending points, ordered by earliest start. Points the truck has
  // already passed for good never enter.
  std::vector<detail::PreparedPoint> pending;
  for (detail::PreparedPoint& p : detail::prepare(inst)) {
    if (p.window && clock <= p.window->ls + slack) pending.push_back(p);
  }
  std::stable_sort(pending.begin(), pending.end(),
                   [](const auto& a, const auto& b) {
                     return a.window->es < b.window->es;
                   });

  Schedule sched;
  while (!pending.empty()) {
    // Nothing reachable yet: ride to the first window.
    clock = std::max(clock, pending.front().window->es);

    std::size_t best = pending.size();
    double best_ret = kInfeasible;
    for (std::size_t c = 0;
         c < pending.size() && pending[c].window->es <= clock; ++c) {
      const double r = detail::recover(clock, pending[c], drone, slack);
      if (r == kInfeasible) continue;
      if (best == pending.size() || r < best_ret - slack) {
        best = c;
        best_ret = r;
        continue;
      }
      if (std::abs(r - best_ret) <= slack) {
        const auto& cur = pending[best];
        const auto& cand = pending[c];
        if (cand.point.x < cur.point.x ||
            (cand.point.x == cur.point.x && cand.index < cur.index)) {
          best = c;
          best_ret = r;
        }
      }
    }
    if (best == pending.size()) break;  // unreachable after pruning

    sched.deliveries.push_back(Delivery{pending[best].index, clock, best_ret});
    clock = best_ret;
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    std::erase_if(pending, [&](const detail::PreparedPoint& p) {
      return p.window->ls + slack < clock;
    });
  }
  return sched;
}

}  // namespace truckdrone
