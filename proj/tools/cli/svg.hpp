#ifndef TRUCKDRONE_CLI_SVG_HPP
#define TRUCKDRONE_CLI_SVG_HPP

#include <string>

#include "truckdrone/model.hpp"

namespace truckdrone::cli {

struct RenderOptions {
  bool show_windows = false;
  bool show_ellipses = false;
};

/**
 * Draws an instance, and optionally a schedule, as a 1200x400 SVG.
 *
 * The band [min x - R, max x + R] x [-m, m] is fitted with a uniform
 * scale. Truck path in red, drone flights in blue, points as labeled
 * dots; start windows and per-flight reach ellipses on request. Output
 * bytes depend only on the inputs.
 */
std::string render_svg(const Instance& inst, const Schedule* sched,
                       const RenderOptions& options);

}  // namespace truckdrone::cli

#endif  // TRUCKDRONE_CLI_SVG_HPP
