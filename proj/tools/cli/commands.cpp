#include "cli/commands.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cli/io.hpp"
#include "cli/svg.hpp"
#include "json.hpp"
#include "truckdrone/truckdrone.hpp"

namespace truckdrone::cli {
namespace {

namespace fs = std::filesystem;

struct SolveFlags {
  std::string algo = "greedy";
  std::string input;
  std::string output;
  double tolerance = kDefaultTolerance;
  bool allow_nonproper = false;
  std::size_t max_points = kDefaultExactBudget;
};

struct SolveOutcome {
  std::optional<Schedule> schedule;
  std::string refusal;
  std::optional<ProperReport> not_proper;
};

SolveOutcome run_algorithm(const std::string& algo, const Instance& inst,
                           const SolveFlags& flags) {
  SolveOutcome outcome;
  try {
    if (algo == "greedy") {
      outcome.schedule = solve_greedy(inst, flags.tolerance);
    } else if (algo == "dp") {
      outcome.schedule =
          solve_dp_proper(inst, !flags.allow_nonproper, flags.tolerance);
    } else if (algo == "exact") {
      outcome.schedule = solve_exact(inst, flags.max_points, flags.tolerance);
    } else {
      throw ParseError("unknown algorithm \"" + algo + "\"");
    }
  } catch (const NotProper& e) {
    outcome.refusal = "not proper";
    outcome.not_proper = e.report();
  } catch (const BudgetExceeded& e) {
    outcome.refusal = e.what();
  }
  return outcome;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

int cmd_solve(const SolveFlags& flags, std::ostream& out, std::ostream& err) {
  const Instance inst = parse_instance(read_file(flags.input));
  const SolveOutcome result = run_algorithm(flags.algo, inst, flags);
  if (!result.schedule) {
    err << "solve refused: " << result.refusal << "\n";
    if (result.not_proper) err << report_json(*result.not_proper);
    return kExitRejected;
  }
  emit(flags.output, serialize_schedule(*result.schedule), out);
  const double completion =
      schedule_completion(inst, *result.schedule, flags.tolerance);
  err << fmt::format("count {} completion {:.17g}\n", result.schedule->size(),
                     completion);
  return kExitOk;
}

int cmd_verify(const std::string& instance_path,
               const std::string& schedule_path, double tol,
               std::ostream& out) {
  const Instance inst = parse_instance(read_file(instance_path));
  const Schedule sched = parse_schedule(read_file(schedule_path));
  FeasibilityReport report;
  try {
    report = verify_schedule(inst, sched, tol);
  } catch (const InvalidSchedule& e) {
    throw ParseError(e.what());
  }

  // Stored returns are derived data; they must match a recomputation.
  const double slack = tol * inst.scale();
  std::vector<std::size_t> mismatches;
  for (std::size_t j = 0; j < sched.size(); ++j) {
    const Delivery& d = sched.deliveries[j];
    const double ret = recover(d.start, inst.point(d.point), inst.drone(), slack);
    if (ret == kInfeasible) continue;  // already reported as a violation
    if (!(std::abs(ret - d.ret) <= slack)) mismatches.push_back(j);
  }

  out << report_json(report, mismatches);
  return report.feasible && mismatches.empty() ? kExitOk : kExitRejected;
}

int cmd_check_proper(const std::string& input, double tol, std::ostream& out) {
  const Instance inst = parse_instance(read_file(input));
  const ProperReport report = check_proper(inst, tol);
  out << report_json(report);
  return report.is_proper ? kExitOk : kExitRejected;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

int cmd_compare(const std::string& input, const std::string& algos,
                const SolveFlags& flags, bool as_json, std::ostream& out,
                bool color) {
  const Instance inst = parse_instance(read_file(input));
  const std::vector<std::string> names = split_list(algos);
  if (names.empty()) throw ParseError("--algos needs at least one algorithm");
  for (const std::string& name : names) {
    if (name != "greedy" && name != "dp" && name != "exact") {
      throw ParseError("unknown algorithm \"" + name + "\"");
    }
  }

  struct Row {
    std::string algo;
    std::optional<std::size_t> count;
    std::optional<double> completion;
    double seconds = 0.0;
    std::string status = "ok";
  };
  std::vector<Row> rows;
  bool refused = false;
  for (const std::string& name : names) {
    const auto t0 = std::chrono::steady_clock::now();
    const SolveOutcome result = run_algorithm(name, inst, flags);
    const auto t1 = std::chrono::steady_clock::now();
    Row row;
    row.algo = name;
    row.seconds = std::chrono::duration<double>(t1 - t0).count();
    if (result.schedule) {
      row.count = result.schedule->size();
      row.completion =
          schedule_completion(inst, *result.schedule, flags.tolerance);
    } else {
      row.status = "refused: " + result.refusal;
      refused = true;
    }
    rows.push_back(row);
  }

  if (as_json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const Row& r : rows) {
      nlohmann::ordered_json item;
      item["algo"] = r.algo;
      item["count"] = r.count ? nlohmann::ordered_json(*r.count) : nullptr;
      item["completion"] =
          r.completion ? nlohmann::ordered_json(*r.completion) : nullptr;
      item["wall_time_s"] = r.seconds;
      item["status"] = r.status;
      doc.push_back(item);
    }
    out << doc.dump(2) << "\n";
  } else {
    const std::string header = fmt::format("{:<8} {:>6} {:>22} {:>12}  {}",
                                           "algo", "count", "completion",
                                           "wall_s", "status");
    out << (color ? "\x1b[1m" + header + "\x1b[0m" : header) << "\n";
    for (const Row& r : rows) {
      out << fmt::format(
          "{:<8} {:>6} {:>22} {:>12.6f}  {}\n", r.algo,
          r.count ? std::to_string(*r.count) : "-",
          r.completion ? fmt::format("{:.17g}", *r.completion) : "-",
          r.seconds, r.status);
    }
  }
  return refused ? kExitRejected : kExitOk;
}

int cmd_render(const std::string& instance_path,
               const std::string& schedule_path, const std::string& out_path,
               const RenderOptions& options) {
  const Instance inst = parse_instance(read_file(instance_path));
  std::optional<Schedule> sched;
  if (!schedule_path.empty()) {
    sched = parse_schedule(read_file(schedule_path));
    for (const Delivery& d : sched->deliveries) {
      if (d.point >= inst.size()) {
        throw ParseError("schedule references point " +
                         std::to_string(d.point) + " not in the instance");
      }
    }
  }
  write_file(out_path, render_svg(inst, sched ? &*sched : nullptr, options));
  return kExitOk;
}

std::vector<std::int64_t> parse_values(const std::string& text) {
  std::vector<std::int64_t> values;
  for (const std::string& item : split_list(text)) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("not an integer: \"" + item + "\"");
    }
  }
  return values;
}

fs::path certificate_path(const fs::path& out) {
  fs::path p = out;
  p.replace_extension(".certificate.json");
  return p;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, bool color) {
  CLI::App app{"Truck-drone en-route delivery scheduling toolkit", "truckdrone"};
  app.require_subcommand(1);

  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Compute a delivery schedule");
  solve->add_option("--algo", solve_flags.algo, "greedy | dp | exact")
      ->required()
      ->check(CLI::IsMember({"greedy", "dp", "exact"}));
  solve->add_option("--input", solve_flags.input, "Instance JSON")->required();
  solve->add_option("--output", solve_flags.output, "Schedule JSON (default stdout)");
  solve->add_option("--tolerance", solve_flags.tolerance, "Relative tolerance");
  solve->add_flag("--allow-nonproper", solve_flags.allow_nonproper,
                  "Run dp as a heuristic on non-proper instances");
  solve->add_option("--max-points", solve_flags.max_points, "Exact solver budget");

  std::string verify_instance, verify_schedule_path;
  double verify_tol = kDefaultTolerance;
  auto* verify = app.add_subcommand("verify", "Check a schedule for feasibility");
  verify->add_option("--instance", verify_instance)->required();
  verify->add_option("--schedule", verify_schedule_path)->required();
  verify->add_option("--tolerance", verify_tol);

  std::string proper_input;
  double proper_tol = kDefaultTolerance;
  auto* check = app.add_subcommand("check-proper", "Test whether an instance is proper");
  check->add_option("--input", proper_input)->required();
  check->add_option("--tolerance", proper_tol);

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  std::size_t gen_n = 0;
  std::size_t gen_k = 1;
  double gen_v = 2.0, gen_r = 10.0, gen_span = 100.0, gen_start = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out, gen_values, gen_certificate;
  int gen_exponent = 4;

  auto* gen_random = gen->add_subcommand("random", "Uniform points in the band");
  gen_random->add_option("--n", gen_n)->required();
  gen_random->add_option("--v", gen_v);
  gen_random->add_option("--R", gen_r);
  gen_random->add_option("--x-span", gen_span);
  gen_random->add_option("--truck-start", gen_start);
  gen_random->add_option("--seed", gen_seed);
  gen_random->add_option("--out", gen_out);

  auto* gen_proper = gen->add_subcommand("random-proper", "Random proper instance");
  gen_proper->add_option("--n", gen_n)->required();
  gen_proper->add_option("--v", gen_v);
  gen_proper->add_option("--R", gen_r);
  gen_proper->add_option("--truck-start", gen_start);
  gen_proper->add_option("--seed", gen_seed);
  gen_proper->add_option("--out", gen_out);

  auto* gen_partition = gen->add_subcommand("partition", "3-Partition reduction instance");
  gen_partition->add_option("--values", gen_values, "Comma-separated integers")
      ->required();
  gen_partition->add_option("--exponent", gen_exponent);
  gen_partition->add_option("--out", gen_out);

  auto* gen_adversarial =
      gen->add_subcommand("adversarial", "Greedy worst case with certificate");
  gen_adversarial->add_option("--k", gen_k, "Number of point pairs");
  gen_adversarial->add_option("--v", gen_v);
  gen_adversarial->add_option("--R", gen_r);
  gen_adversarial->add_option("--out", gen_out)->required();
  gen_adversarial->add_option("--certificate", gen_certificate,
                              "Certificate path (default <out>.certificate.json)");

  std::string compare_input, compare_algos = "greedy,dp,exact";
  bool compare_json = false;
  SolveFlags compare_flags;
  auto* compare = app.add_subcommand("compare", "Run several algorithms side by side");
  compare->add_option("--input", compare_input)->required();
  compare->add_option("--algos", compare_algos, "Comma-separated list");
  compare->add_flag("--json", compare_json);
  compare->add_option("--tolerance", compare_flags.tolerance);
  compare->add_flag("--allow-nonproper", compare_flags.allow_nonproper);
  compare->add_option("--max-points", compare_flags.max_points);

  std::string render_instance, render_schedule, render_out;
  RenderOptions render_options;
  auto* render = app.add_subcommand("render", "Draw an instance and schedule as SVG");
  render->add_option("--instance", render_instance)->required();
  render->add_option("--schedule", render_schedule);
  render->add_option("--out", render_out)->required();
  render->add_flag("--show-windows", render_options.show_windows);
  render->add_flag("--show-ellipses", render_options.show_ellipses);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_flags, out, err);
    if (verify->parsed()) {
      return cmd_verify(verify_instance, verify_schedule_path, verify_tol, out);
    }
    if (check->parsed()) return cmd_check_proper(proper_input, proper_tol, out);
    if (compare->parsed()) {
      return cmd_compare(compare_input, compare_algos, compare_flags,
                         compare_json, out, color);
    }
    if (render->parsed()) {
      return cmd_render(render_instance, render_schedule, render_out,
                        render_options);
    }
    if (gen_random->parsed()) {
      emit(gen_out,
           serialize_instance(gen_random_band(gen_n, Drone{gen_v, gen_r},
                                              gen_span, gen_seed, gen_start)),
           out);
      return kExitOk;
    }
    if (gen_proper->parsed()) {
      emit(gen_out,
           serialize_instance(gen_random_proper(gen_n, Drone{gen_v, gen_r},
                                                gen_seed, gen_start)),
           out);
      return kExitOk;
    }
    if (gen_partition->parsed()) {
      const auto built = gen_three_partition(
          ThreePartitionSpec{parse_values(gen_values), gen_exponent});
      emit(gen_out, serialize_instance(built.instance), out);
      err << fmt::format("k {} target {} epsilon {:.17g} points {}\n",
                         built.k, built.target, built.epsilon,
                         built.expected_count);
      return kExitOk;
    }
    if (gen_adversarial->parsed()) {
      const auto built = gen_greedy_tightness(gen_k, Drone{gen_v, gen_r});
      write_file(gen_out, serialize_instance(built.instance));
      const fs::path cert = gen_certificate.empty()
                                ? certificate_path(gen_out)
                                : fs::path(gen_certificate);
      write_file(cert, certificate_json(built.certificate));
      err << fmt::format("exact {} greedy {} certified by {}\n",
                         built.certificate.exact_count,
                         built.certificate.greedy_count,
                         built.certificate.certified_by);
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidParameters& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidSchedule& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRejected;
  }
  return kExitUsage;
}

}  // namespace truckdrone::cli
