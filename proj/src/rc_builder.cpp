#include "rainbow/rc_builder.hpp"

#include <set>

#include "rainbow/layers.hpp"

namespace rainbow {

RcResult build(const Graph& g) {
  if (!is_connected(g)) throw ConnectivityError("build requires a connected graph");
  RcResult result;
  if (g.vertex_count() <= 1) {
    // a single vertex needs no colors; the budget sum is empty
    result.center = g.vertex_count() == 1 ? 0 : -1;
    return result;
  }

  const Metrics metrics = radius_center(g);
  result.radius = metrics.radius;
  result.center = metrics.centers.front();

  std::vector<int> core{result.center};
  int palette_start = 1;
  for (int k = result.radius; k >= 1; --k) {
    StageReport stage = expand_step(g, core, k, result.coloring, palette_start);
    palette_start += stage.block_size;
    result.bound += stage.block_size;
    core = stage.core_out;
    result.stages.push_back(std::move(stage));
  }

  if (static_cast<int>(core.size()) != g.vertex_count())
    throw InternalError("construction finished without absorbing every vertex");
  if (static_cast<int>(result.coloring.assignment.size()) != g.edge_count())
    throw InternalError("construction finished with uncolored edges");

  std::set<int> distinct;
  for (const auto& [edge, color] : result.coloring.assignment) distinct.insert(color);
  result.colors_used = static_cast<int>(distinct.size());
  return result;
}

BoundBreakdown theorem2_bound(const Graph& g) {
  const RcResult result = build(g);
  BoundBreakdown breakdown;
  breakdown.bound = result.bound;
  breakdown.bridges_by_level.resize(result.stages.size(), 0);
  for (const StageReport& stage : result.stages)
    breakdown.bridges_by_level[stage.stage - 1] = stage.bridge_count;
  return breakdown;
}

bool corollary1_check(const Graph& g, const std::vector<StageReport>& stages) {
  int total = 0;
  for (const StageReport& stage : stages) total += stage.bridge_count;
  return total == static_cast<int>(find_bridges(g).size());
}

}  // namespace rainbow
