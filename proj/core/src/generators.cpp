#include "truckdrone/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "truckdrone/errors.hpp"
#include "truckdrone/proper.hpp"
#include "truckdrone/solvers.hpp"

namespace truckdrone {
namespace {

// Portable uniform draws: the engine is fully specified by the standard,
// the distribution adaptors are not.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Ordinate in [-m, m] away from the truck's path.
  double band(double minor_radius) {
    for (;;) {
      const double y = uniform(-minor_radius, minor_radius);
      if (std::abs(y) >= 1e-6 * minor_radius) return y;
    }
  }

 private:
  std::mt19937_64 engine_;
};

constexpr std::size_t kMaxRejections = 10'000;

}  // namespace

Instance gen_random_band(std::size_t n, const Drone& drone, double x_span,
                         std::uint64_t seed, double truck_start) {
  const Envelope env = reach_envelope(drone);
  if (!(x_span >= 0.0) || !std::isfinite(x_span)) {
    throw InvalidParameters("x span must be finite and non-negative");
  }
  Sampler rng(seed);
  std::vector<DeliveryPoint> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.uniform(0.0, x_span);
    const double y = rng.band(env.minor_radius);
    points.push_back({x, y});
  }
  return Instance(drone, truck_start, std::move(points));
}

Instance gen_random_proper(std::size_t n, const Drone& drone,
                           std::uint64_t seed, double truck_start) {
  const Envelope env = reach_envelope(drone);
  const double r = drone.range;
  Sampler rng(seed);
  std::size_t rejections = 0;

  for (;;) {
    std::vector<DeliveryPoint> points;
    points.reserve(n);
    double scale = std::max({1.0, r, std::abs(truck_start)});
    double x = truck_start;
    while (points.size() < n) {
      // Gaps around a fifth of the range keep windows overlapping, so
      // the instances are not trivially all-servable.
      const double gap = rng.uniform(0.05 * r, 0.6 * r);
      const DeliveryPoint candidate{x + gap, rng.band(env.minor_radius)};
      const double slack =
          kDefaultTolerance *
          std::max({scale, std::abs(candidate.x), std::abs(candidate.y)});
      const bool ok = std::all_of(
          points.begin(), points.end(), [&](const DeliveryPoint& p) {
            return proper_pair(p, candidate, drone, slack);
          });
      if (!ok) {
        if (++rejections > kMaxRejections) {
          throw GenerationError("gen_random_proper: exceeded " +
                                std::to_string(kMaxRejections) +
                                " rejected candidates");
        }
        continue;
      }
      points.push_back(candidate);
      x = candidate.x;
      scale = std::max({scale, std::abs(candidate.x), std::abs(candidate.y)});
    }

    Instance inst(drone, truck_start, std::move(points));
    if (check_proper(inst).is_proper) return inst;
    if (++rejections > kMaxRejections) {
      throw GenerationError("gen_random_proper: final check kept failing");
    }
  }
}

ThreePartitionInstance gen_three_partition(const ThreePartitionSpec& spec) {
  const std::size_t n = spec.values.size();
  if (n == 0 || n % 3 != 0) {
    throw GenerationError("3-partition input needs 3k values, got " +
                          std::to_string(n));
  }
  if (std::any_of(spec.values.begin(), spec.values.end(),
                  [](std::int64_t y) { return y <= 0; })) {
    throw GenerationError("3-partition values must be positive");
  }
  if (spec.exponent < 1) {
    throw GenerationError("separation exponent must be >= 1");
  }
  const std::size_t k = n / 3;
  const std::int64_t sum =
      std::accumulate(spec.values.begin(), spec.values.end(), std::int64_t{0});
  if (sum % static_cast<std::int64_t>(k) != 0) {
    throw GenerationError("value sum " + std::to_string(sum) +
                          " is not divisible by k = " + std::to_string(k));
  }
  const std::int64_t target = sum / static_cast<std::int64_t>(k);

  const double t = static_cast<double>(target);
  const Drone drone{t, 4.0 * t};
  const double m = reach_envelope(drone).minor_radius;
  const double epsilon =
      std::pow(static_cast<double>(n), -static_cast<double>(spec.exponent + 2));
  const double period = 6.0 + epsilon;

  std::vector<std::int64_t> ys = spec.values;
  std::sort(ys.begin(), ys.end());

  std::vector<DeliveryPoint> points;
  points.reserve(n + (k - 1) + static_cast<std::size_t>(target) + 1);
  for (std::int64_t y : ys) points.push_back({0.0, static_cast<double>(y)});
  const std::size_t a_end = points.size();
  for (std::size_t i = 1; i < k; ++i) {
    points.push_back({static_cast<double>(i) * period, m});
  }
  const std::size_t b_end = points.size();
  const double tail = static_cast<double>(k) * period;
  for (std::int64_t step = 0; step <= target; ++step) {
    points.push_back({tail + 4.0 * static_cast<double>(step), m});
  }
  const std::size_t count = points.size();

  return ThreePartitionInstance{
      .instance = Instance(drone, 2.0, std::move(points)),
      .k = k,
      .target = target,
      .epsilon = epsilon,
      .expected_count = count,
      .a_end = a_end,
      .b_end = b_end,
  };
}

namespace {

// Offsets of one adversarial pair relative to its band-edge point at x = 0.
struct PairLayout {
  double even_dx = 0.0;
  double even_y = 0.0;
  double margin = 0.0;
};

// Scores a layout: the smallest slack over the constraints that make
// greedy take the even point first and still let both be served in order.
std::optional<PairLayout> score_layout(double dx, double y_frac,
                                       const Drone& drone) {
  const Envelope env = reach_envelope(drone);
  const double c = env.focal_gap / 2.0;
  const DeliveryPoint even{dx, y_frac * env.minor_radius};
  const auto w = start_window(even, drone);
  if (!w) return std::nullopt;

  // Greedy's pick: opens before the edge point (es = ls = -c) and its
  // earliest recovery lands after it, killing the edge point.
  const double opens_first = -c - w->es;
  const double kills_edge = w->er - (-c);
  // Optimal order: edge point at -c, recovered at +c, then the even one.
  const double follows = w->ls - c;
  const double margin = std::min({opens_first, kills_edge, follows});
  if (!(margin > 0.0)) return std::nullopt;
  return PairLayout{dx, even.y, margin};
}

Instance build_pairs(std::size_t k, const Drone& drone,
                     const PairLayout& layout) {
  const Envelope env = reach_envelope(drone);
  const double c = env.focal_gap / 2.0;
  const DeliveryPoint even{layout.even_dx, layout.even_y};
  const StartWindow w = *start_window(even, drone);
  const double greedy_back = w.er;
  const double optimal_back = return_position(c, even, drone);

  // Each pair starts after both schedules have finished the previous one.
  const double period = std::max(greedy_back, optimal_back) - w.es + 2.0 * c;
  const double origin = -w.es + c;

  std::vector<DeliveryPoint> points;
  points.reserve(2 * k);
  for (std::size_t p = 0; p < k; ++p) {
    const double base = origin + static_cast<double>(p) * period;
    points.push_back({base, env.minor_radius});
    points.push_back({base + layout.even_dx, layout.even_y});
  }
  return Instance(drone, 0.0, std::move(points));
}

}  // namespace

TightnessInstance gen_greedy_tightness(std::size_t k, const Drone& drone) {
  if (k == 0) throw InvalidParameters("tightness family needs k >= 1");
  const Envelope env = reach_envelope(drone);
  const double c = env.focal_gap / 2.0;

  std::vector<PairLayout> layouts;
  for (int dx_step = 0; dx_step <= 16; ++dx_step) {
    for (int y_step = 1; y_step <= 19; ++y_step) {
      const double dx = c * (0.25 * dx_step);
      if (auto l = score_layout(dx, 0.05 * y_step, drone)) layouts.push_back(*l);
    }
  }
  std::stable_sort(layouts.begin(), layouts.end(),
                   [](const PairLayout& a, const PairLayout& b) {
                     return a.margin > b.margin;
                   });

  for (const PairLayout& layout : layouts) {
    Instance inst = build_pairs(k, drone, layout);

    TightnessCertificate cert;
    cert.pairs = k;
    cert.greedy = solve_greedy(inst);
    cert.greedy_count = cert.greedy.size();
    if (cert.greedy_count != k) continue;

    if (k <= 3) {
      cert.witness = solve_exact(inst);
      cert.certified_by = "exact";
    } else {
      std::vector<std::size_t> order(inst.size());
      std::iota(order.begin(), order.end(), 0);
      auto packed = earliest_start_pack(inst, order);
      if (!packed || !verify_schedule(inst, *packed).feasible) continue;
      cert.witness = *packed;
      cert.certified_by = "witness";
    }
    cert.exact_count = cert.witness.size();
    if (cert.exact_count != 2 * k) continue;

    return TightnessInstance{std::move(inst), std::move(cert)};
  }
  throw GenerationError("no certified tightness layout for k = " +
                        std::to_string(k));
}

}  // namespace truckdrone
