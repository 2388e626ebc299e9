#include "cli/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <vector>

namespace truckdrone::cli {
namespace {

constexpr double kWidth = 1200.0;
constexpr double kHeight = 400.0;

class Canvas {
 public:
  Canvas(double x_min, double x_max, double half_height) : x_min_(x_min) {
    const double span_x = x_max - x_min;
    const double span_y = 2.0 * half_height;
    scale_ = std::min(kWidth / span_x, kHeight / span_y);
    left_ = (kWidth - span_x * scale_) / 2.0;
  }

  double px(double x) const { return left_ + (x - x_min_) * scale_; }
  double py(double y) const { return kHeight / 2.0 - y * scale_; }
  double length(double d) const { return d * scale_; }

 private:
  double x_min_;
  double scale_ = 1.0;
  double left_ = 0.0;
};

std::string f3(double v) { return fmt::format("{:.3f}", v); }

}  // namespace

std::string render_svg(const Instance& inst, const Schedule* sched,
                       const RenderOptions& options) {
  const Envelope env = reach_envelope(inst.drone());
  double x_min = inst.truck_start();
  double x_max = inst.truck_start();
  if (!inst.empty()) {
    x_min = x_max = inst.point(0).x;
    for (const DeliveryPoint& p : inst.points()) {
      x_min = std::min(x_min, p.x);
      x_max = std::max(x_max, p.x);
    }
  }
  x_min -= inst.range();
  x_max += inst.range();
  const Canvas cv(x_min, x_max, env.minor_radius);

  std::string out;
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      kWidth, kHeight);
  out += fmt::format("<title>v={} R={} n={}</title>\n", inst.speed(),
                     inst.range(), inst.size());
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Band edges and the street.
  for (double y : {env.minor_radius, -env.minor_radius}) {
    out += fmt::format(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#bbbbbb\" "
        "stroke-dasharray=\"4 4\"/>\n",
        f3(cv.px(x_min)), f3(cv.py(y)), f3(cv.px(x_max)), f3(cv.py(y)));
  }
  out += fmt::format(
      "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#888888\"/>\n",
      f3(cv.px(x_min)), f3(cv.py(0.0)), f3(cv.px(x_max)), f3(cv.py(0.0)));
  const double truck_from = std::max(x_min, inst.truck_start());
  out += fmt::format(
      "<line class=\"truck\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" "
      "stroke=\"red\" stroke-width=\"2\"/>\n",
      f3(cv.px(truck_from)), f3(cv.py(0.0)), f3(cv.px(x_max)), f3(cv.py(0.0)));

  if (options.show_windows) {
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const auto w = start_window(inst.point(i), inst.drone());
      if (!w) continue;
      const double y = cv.py(0.0) + 6.0 + 3.0 * static_cast<double>(i % 4);
      out += fmt::format(
          "<path class=\"window\" data-point=\"{}\" d=\"M{} {} V{} H{} V{}\" "
          "fill=\"none\" stroke=\"green\"/>\n",
          i, f3(cv.px(w->es)), f3(y - 3.0), f3(y), f3(cv.px(w->ls)),
          f3(y - 3.0));
    }
  }

  std::vector<bool> served(inst.size(), false);
  if (sched != nullptr) {
    for (std::size_t j = 0; j < sched->size(); ++j) {
      const Delivery& d = sched->deliveries[j];
      if (d.point >= inst.size()) continue;
      served[d.point] = true;
      const DeliveryPoint& p = inst.point(d.point);
      if (options.show_ellipses) {
        out += fmt::format(
            "<ellipse class=\"reach\" cx=\"{}\" cy=\"{}\" rx=\"{}\" ry=\"{}\" "
            "fill=\"none\" stroke=\"green\" stroke-dasharray=\"3 3\"/>\n",
            f3(cv.px(d.start + env.focal_gap / 2.0)), f3(cv.py(0.0)),
            f3(cv.length(env.major_radius)), f3(cv.length(env.minor_radius)));
      }
      out += fmt::format(
          "<polyline class=\"flight\" data-order=\"{}\" points=\"{},{} {},{} "
          "{},{}\" fill=\"none\" stroke=\"blue\"/>\n",
          j + 1, f3(cv.px(d.start)), f3(cv.py(0.0)), f3(cv.px(p.x)),
          f3(cv.py(p.y)), f3(cv.px(d.ret)), f3(cv.py(0.0)));
    }
  }

  for (std::size_t i = 0; i < inst.size(); ++i) {
    const DeliveryPoint& p = inst.point(i);
    out += fmt::format(
        "<circle class=\"point\" cx=\"{}\" cy=\"{}\" r=\"3\" stroke=\"black\" "
        "fill=\"{}\"/>\n",
        f3(cv.px(p.x)), f3(cv.py(p.y)), served[i] ? "black" : "white");
    out += fmt::format(
        "<text x=\"{}\" y=\"{}\" font-size=\"10\" "
        "font-family=\"sans-serif\">d{}</text>\n",
        f3(cv.px(p.x) + 4.0), f3(cv.py(p.y) - 4.0), i + 1);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace truckdrone::cli
