#include <string>
#include <vector>

#include "prepared.hpp"
#include "truckdrone/errors.hpp"
#include "truckdrone/solvers.hpp"

namespace truckdrone {
namespace {

class ExactSearch {
 public:
  ExactSearch(const Instance& inst, double tol)
      : inst_(inst),
        slack_(tol * inst.scale()),
        points_(detail::prepare(inst)),
        used_(inst.size(), false) {}

  Schedule run() {
    best_completion_ = inst_.truck_start();
    explore(inst_.truck_start());
    return best_;
  }

 private:
  // Children are tried in increasing index order, so among orders of equal
  // length the lexicographically smallest is met first.
  void explore(double clock) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (used_[i] || !points_[i].window) continue;
      const double launch = std::max(clock, points_[i].window->es);
      const double ret =
          detail::recover(launch, points_[i], inst_.drone(), slack_);
      if (ret == kInfeasible) continue;

      used_[i] = true;
      current_.deliveries.push_back(Delivery{i, launch, ret});
      offer(ret);
      if (current_.size() + still_reachable(ret) >= best_.size()) {
        explore(ret);
      }
      current_.deliveries.pop_back();
      used_[i] = false;
    }
  }

  void offer(double completion) {
    if (current_.size() > best_.size() ||
        (current_.size() == best_.size() && completion < best_completion_)) {
      best_ = current_;
      best_completion_ = completion;
    }
  }

  std::size_t still_reachable(double clock) const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!used_[i] && points_[i].window &&
          points_[i].window->ls + slack_ >= clock) {
        ++count;
      }
    }
    return count;
  }

  const Instance& inst_;
  double slack_;
  std::vector<detail::PreparedPoint> points_;
  std::vector<bool> used_;
  Schedule current_;
  Schedule best_;
  double best_completion_ = 0.0;
};

}  // namespace

Schedule solve_exact(const Instance& inst, std::size_t max_points, double tol) {
  if (inst.size() > max_points) {
    throw BudgetExceeded("exact search limited to " +
                         std::to_string(max_points) + " points, instance has " +
                         std::to_string(inst.size()));
  }
  return ExactSearch(inst, tol).run();
}

}  // namespace truckdrone
