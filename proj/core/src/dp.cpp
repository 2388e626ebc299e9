#include <algorithm>
#include <numeric>
#include <vector>

#include "prepared.hpp"
#include "truckdrone/solvers.hpp"

namespace truckdrone {

NotProper::NotProper(ProperReport report)
    : std::runtime_error("instance is not proper"), report_(std::move(report)) {}

DpTable build_dp_table(const Instance& inst, double tol) {
  const double slack = tol * inst.scale();
  const Drone& drone = inst.drone();
  const std::size_t n = inst.size();

  std::vector<detail::PreparedPoint> prepared = detail::prepare(inst);
  DpTable table;
  table.rank_to_point.resize(n);
  std::iota(table.rank_to_point.begin(), table.rank_to_point.end(), 0);
  std::stable_sort(table.rank_to_point.begin(), table.rank_to_point.end(),
                   [&](std::size_t a, std::size_t b) {
                     const DeliveryPoint& pa = inst.point(a);
                     const DeliveryPoint& pb = inst.point(b);
                     if (pa.x != pb.x) return pa.x < pb.x;
                     return pa.y < pb.y;
                   });
  std::vector<detail::PreparedPoint> ranked;
  ranked.reserve(n);
  for (std::size_t idx : table.rank_to_point) ranked.push_back(prepared[idx]);

  // One delivery: straight from the truck's start.
  std::vector<double> row(n, kInfeasible);
  bool any = false;
  for (std::size_t j = 0; j < n; ++j) {
    row[j] = detail::recover(inst.truck_start(), ranked[j], drone, slack);
    any = any || row[j] != kInfeasible;
  }
  if (!any) return table;
  table.completion.push_back(row);
  table.parent.emplace_back(n, DpTable::kNoParent);

  // i deliveries ending at rank j: best (i-1)-schedule ending left of j,
  // followed by the earliest delivery to j.
  for (std::size_t count = 2; count <= n; ++count) {
    const std::vector<double>& prev = table.completion.back();
    std::vector<double> cur(n, kInfeasible);
    std::vector<std::size_t> parent(n, DpTable::kNoParent);
    any = false;
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t jp = 0; jp < j; ++jp) {
        if (prev[jp] == kInfeasible) continue;
        const double r = detail::recover(prev[jp], ranked[j], drone, slack);
        if (r < cur[j]) {
          cur[j] = r;
          parent[j] = jp;
        }
      }
      any = any || cur[j] != kInfeasible;
    }
    if (!any) break;
    table.completion.push_back(std::move(cur));
    table.parent.push_back(std::move(parent));
  }
  return table;
}

Schedule solve_dp_proper(const Instance& inst, bool require_proper,
                         double tol) {
  if (require_proper) {
    ProperReport report = check_proper(inst, tol);
    if (!report.is_proper) throw NotProper(std::move(report));
  }

  const DpTable table = build_dp_table(inst, tol);
  if (table.completion.empty()) return Schedule{};

  const std::vector<double>& last = table.completion.back();
  std::size_t rank = 0;
  for (std::size_t j = 1; j < last.size(); ++j) {
    if (last[j] < last[rank]) rank = j;
  }

  std::vector<std::size_t> order(table.completion.size());
  for (std::size_t row = table.completion.size(); row-- > 0;) {
    order[row] = table.rank_to_point[rank];
    rank = table.parent[row][rank];
  }

  // Repacking the chosen order reproduces the table's recoveries exactly.
  auto sched = earliest_start_pack(inst, order, tol);
  return sched ? *sched : Schedule{};
}

}  // namespace truckdrone
