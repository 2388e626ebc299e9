#include "cli/io.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "truckdrone/errors.hpp"

namespace truckdrone::cli {
namespace {

using json = nlohmann::ordered_json;

// -0 prints as 0 so equal values serialize to equal bytes.
std::string number(double value) {
  return fmt::format("{:.17g}", value == 0.0 ? 0.0 : value);
}

void require_keys(const json& obj, std::string_view what,
                  std::initializer_list<std::string_view> allowed,
                  std::initializer_list<std::string_view> required) {
  if (!obj.is_object()) throw ParseError(std::string(what) + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || key == a;
    if (!known) {
      throw ParseError(fmt::format("{}: unknown field \"{}\"", what, key));
    }
  }
  for (std::string_view r : required) {
    if (!obj.contains(std::string(r))) {
      throw ParseError(fmt::format("{}: missing field \"{}\"", what, r));
    }
  }
}

double get_number(const json& obj, const char* key, std::string_view what) {
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw ParseError(fmt::format("{}: field \"{}\" must be a number", what, key));
  }
  return v.get<double>();
}

std::size_t get_index(const json& obj, const char* key, std::string_view what) {
  const json& v = obj.at(key);
  if (!v.is_number_unsigned()) {
    throw ParseError(fmt::format(
        "{}: field \"{}\" must be a non-negative integer", what, key));
  }
  return v.get<std::size_t>();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json schedule_value(const Schedule& sched) {
  json deliveries = json::array();
  for (const Delivery& d : sched.deliveries) {
    deliveries.push_back(
        {{"point", d.point}, {"start", d.start}, {"return", d.ret}});
  }
  return {{"deliveries", deliveries}, {"count", sched.size()}};
}

json finite_or_null(double value) {
  if (std::isfinite(value)) return value;
  return nullptr;
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
  std::string out = "{\n";
  out += fmt::format("  \"v\": {},\n", number(inst.speed()));
  out += fmt::format("  \"R\": {},\n", number(inst.range()));
  out += fmt::format("  \"truck_start\": {},\n", number(inst.truck_start()));
  if (inst.empty()) {
    out += "  \"points\": []\n}\n";
    return out;
  }
  out += "  \"points\": [\n";
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const DeliveryPoint& p = inst.point(i);
    out += fmt::format("    {{\"x\": {}, \"y\": {}}}{}\n", number(p.x),
                       number(p.y), i + 1 < inst.size() ? "," : "");
  }
  out += "  ]\n}\n";
  return out;
}

std::string serialize_schedule(const Schedule& sched) {
  std::string out = "{\n";
  if (sched.empty()) {
    out += "  \"deliveries\": [],\n";
  } else {
    out += "  \"deliveries\": [\n";
    for (std::size_t i = 0; i < sched.size(); ++i) {
      const Delivery& d = sched.deliveries[i];
      out += fmt::format(
          "    {{\"point\": {}, \"start\": {}, \"return\": {}}}{}\n", d.point,
          number(d.start), number(d.ret), i + 1 < sched.size() ? "," : "");
    }
    out += "  ],\n";
  }
  out += fmt::format("  \"count\": {}\n}}\n", sched.size());
  return out;
}

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  require_keys(doc, "instance", {"v", "R", "truck_start", "points"},
               {"v", "R", "points"});
  const double v = get_number(doc, "v", "instance");
  const double r = get_number(doc, "R", "instance");
  const double start =
      doc.contains("truck_start") ? get_number(doc, "truck_start", "instance")
                                  : 0.0;
  const json& pts = doc.at("points");
  if (!pts.is_array()) throw ParseError("instance: points must be an array");

  std::vector<DeliveryPoint> points;
  points.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string what = fmt::format("points[{}]", i);
    require_keys(pts[i], what, {"x", "y"}, {"x", "y"});
    points.push_back(
        {get_number(pts[i], "x", what), get_number(pts[i], "y", what)});
  }
  try {
    return Instance(Drone{v, r}, start, std::move(points));
  } catch (const InvalidParameters& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

Schedule parse_schedule(std::string_view text) {
  const json doc = parse_json(text);
  require_keys(doc, "schedule", {"deliveries", "count"}, {"deliveries", "count"});
  const json& items = doc.at("deliveries");
  if (!items.is_array()) throw ParseError("schedule: deliveries must be an array");

  Schedule sched;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string what = fmt::format("deliveries[{}]", i);
    require_keys(items[i], what, {"point", "start", "return"},
                 {"point", "start", "return"});
    sched.deliveries.push_back(Delivery{get_index(items[i], "point", what),
                                        get_number(items[i], "start", what),
                                        get_number(items[i], "return", what)});
  }
  if (get_index(doc, "count", "schedule") != sched.size()) {
    throw ParseError("schedule: count does not match deliveries");
  }
  return sched;
}

std::string report_json(const FeasibilityReport& report,
                        std::span<const std::size_t> return_mismatches) {
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back(
        {{"entry", v.entry}, {"reason", std::string(to_string(v.reason))}});
  }
  json doc = {{"feasible", report.feasible},
              {"completion", finite_or_null(report.completion)},
              {"violations", violations},
              {"return_mismatches", json(std::vector<std::size_t>(
                                        return_mismatches.begin(),
                                        return_mismatches.end()))}};
  return doc.dump(2) + "\n";
}

std::string report_json(const ProperReport& report) {
  json doc = {{"is_proper", report.is_proper},
              {"triangle_violations", report.triangle_violations},
              {"nesting_violations", report.nesting_violations},
              {"out_of_band", report.out_of_band}};
  return doc.dump(2) + "\n";
}

std::string certificate_json(const TightnessCertificate& cert) {
  json doc = {{"pairs", cert.pairs},
              {"exact_count", cert.exact_count},
              {"greedy_count", cert.greedy_count},
              {"certified_by", cert.certified_by},
              {"witness", schedule_value(cert.witness)},
              {"greedy", schedule_value(cert.greedy)}};
  return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw ParseError("failed writing " + path.string());
}

}  // namespace truckdrone::cli
