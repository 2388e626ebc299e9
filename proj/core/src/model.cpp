#include "truckdrone/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "truckdrone/errors.hpp"

namespace truckdrone {

Instance::Instance(Drone drone, double truck_start,
                   std::vector<DeliveryPoint> points)
    : drone_(drone), truck_start_(truck_start), points_(std::move(points)) {
  validate(drone_);
  if (!std::isfinite(truck_start_)) {
    throw InvalidParameters("truck start must be finite");
  }
  scale_ = std::max({1.0, drone_.range, std::abs(truck_start_)});
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const DeliveryPoint& p = points_[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InvalidParameters("point " + std::to_string(i) +
                              " has a non-finite coordinate");
    }
    if (p.y == 0.0) {
      throw InvalidParameters("point " + std::to_string(i) +
                              " lies on the truck trajectory (y == 0)");
    }
    scale_ = std::max({scale_, std::abs(p.x), std::abs(p.y)});
  }
}

std::vector<std::size_t> Schedule::order() const {
  std::vector<std::size_t> out;
  out.reserve(deliveries.size());
  for (const Delivery& d : deliveries) out.push_back(d.point);
  return out;
}

std::string_view to_string(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::kStartBeforeTruck:
      return "start-before-truck";
    case ViolationReason::kStartAfterLatest:
      return "start-after-ls";
    case ViolationReason::kOverlapWithPrevious:
      return "overlap-with-previous";
    case ViolationReason::kOutOfBand:
      return "out-of-band";
    case ViolationReason::kDuplicatePoint:
      return "duplicate-point";
  }
  return "unknown";
}

double recover(double launch, const DeliveryPoint& point, const Drone& drone,
               double slack) {
  const auto window = start_window(point, drone);
  if (!window || launch > window->ls + slack) return kInfeasible;
  return return_position(std::min(launch, window->ls), point, *window, drone);
}

FeasibilityReport verify_schedule(const Instance& inst, const Schedule& sched,
                                  double tol) {
  const double slack = tol * inst.scale();
  FeasibilityReport report;
  std::vector<bool> seen(inst.size(), false);
  double previous = inst.truck_start();

  for (std::size_t j = 0; j < sched.deliveries.size(); ++j) {
    const Delivery& del = sched.deliveries[j];
    if (del.point >= inst.size()) {
      throw InvalidSchedule("entry " + std::to_string(j) +
                            " references point " + std::to_string(del.point) +
                            " but the instance has " +
                            std::to_string(inst.size()));
    }
    auto flag = [&](ViolationReason r) {
      report.violations.push_back(Violation{j, r});
    };

    if (seen[del.point]) flag(ViolationReason::kDuplicatePoint);
    seen[del.point] = true;

    if (j == 0) {
      if (del.start < inst.truck_start() - slack) {
        flag(ViolationReason::kStartBeforeTruck);
      }
    } else if (previous != kInfeasible && del.start < previous - slack) {
      flag(ViolationReason::kOverlapWithPrevious);
    }

    const DeliveryPoint& p = inst.point(del.point);
    const auto window = start_window(p, inst.drone());
    if (!window) {
      flag(ViolationReason::kOutOfBand);
      previous = kInfeasible;
    } else if (del.start > window->ls + slack) {
      flag(ViolationReason::kStartAfterLatest);
      previous = kInfeasible;
    } else {
      previous = return_position(std::min(del.start, window->ls), p,
                                 inst.drone());
    }
  }

  report.feasible = report.violations.empty();
  report.completion = previous;
  return report;
}

double schedule_completion(const Instance& inst, const Schedule& sched,
                           double tol) {
  const FeasibilityReport report = verify_schedule(inst, sched, tol);
  if (!report.feasible) {
    const Violation& first = report.violations.front();
    throw InfeasibleSchedule("schedule entry " + std::to_string(first.entry) +
                             " is infeasible: " +
                             std::string(to_string(first.reason)));
  }
  return report.completion;
}

std::optional<Schedule> earliest_start_pack(const Instance& inst,
                                            std::span<const std::size_t> order,
                                            double tol) {
  std::vector<bool> used(inst.size(), false);
  for (std::size_t idx : order) {
    if (idx >= inst.size()) {
      throw InvalidSchedule("order references point " + std::to_string(idx) +
                            " but the instance has " +
                            std::to_string(inst.size()));
    }
    if (used[idx]) {
      throw InvalidSchedule("order repeats point " + std::to_string(idx));
    }
    used[idx] = true;
  }

  const double slack = tol * inst.scale();
  Schedule sched;
  sched.deliveries.reserve(order.size());
  double clock = inst.truck_start();
  for (std::size_t idx : order) {
    const DeliveryPoint& p = inst.point(idx);
    const auto window = start_window(p, inst.drone());
    if (!window) return std::nullopt;
    const double launch = std::max(clock, window->es);
    const double ret = recover(launch, p, inst.drone(), slack);
    if (ret == kInfeasible) return std::nullopt;
    sched.deliveries.push_back(Delivery{idx, launch, ret});
    clock = ret;
  }
  return sched;
}

}  // namespace truckdrone
