#include "rainbow/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>

#include "rainbow/verifier.hpp"

namespace rainbow {

int rc_lower_bound(const Graph& g) {
  if (!is_connected(g)) throw ConnectivityError("rc_lower_bound requires a connected graph");
  if (g.edge_count() == 0) return 0;
  const Metrics metrics = radius_center(g);
  return std::max(metrics.diameter, static_cast<int>(find_bridges(g).size()));
}

int exact_rc(const Graph& g, const OracleLimits& limits) {
  if (!is_connected(g)) throw ConnectivityError("exact_rc requires a connected graph");
  const int m = g.edge_count();
  if (m == 0) return 0;
  if (m > limits.max_edges)
    throw CapacityError("graph has " + std::to_string(m) + " edges; the oracle cap is " +
                        std::to_string(limits.max_edges) + " (raise --max-edges to override)");

  const auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(limits.time_budget_seconds));
  const auto& edges = g.edges();
  std::vector<int> colors(m, 0);

  // Colorings are enumerated up to color permutation as restricted growth
  // strings in lexicographic edge order: colors[0] = 1 and each next color is
  // at most one past the maximum so far. Rounds after the first only visit
  // strings whose maximum equals the cap; smaller palettes were already tried.
  std::function<bool(int, int, int, bool)> enumerate = [&](int index, int max_used, int cap,
                                                           bool require_full) -> bool {
    if (require_full && max_used + (m - index) < cap) return false;
    if (index == m) {
      if (require_full && max_used != cap) return false;
      if (std::chrono::steady_clock::now() > deadline)
        throw CapacityError("oracle time budget exceeded");
      Coloring candidate;
      for (int i = 0; i < m; ++i) candidate.assignment.emplace(edges[i], colors[i]);
      return is_rainbow_connected(g, candidate).ok;
    }
    const int limit = std::min(max_used + 1, cap);
    for (int value = 1; value <= limit; ++value) {
      colors[index] = value;
      if (enumerate(index + 1, std::max(max_used, value), cap, require_full)) return true;
    }
    return false;
  };

  const int lower = std::max(1, rc_lower_bound(g));
  for (int t = lower; t <= m; ++t) {
    if (t > limits.max_colors)
      throw CapacityError("oracle palette cap " + std::to_string(limits.max_colors) +
                          " reached without an answer");
    colors[0] = 1;
    if (enumerate(1, 1, t, t > lower)) return t;
  }
  // t = m always succeeds: all-distinct colors make every path rainbow
  throw InternalError("exact_rc failed to terminate at t = m");
}

}  // namespace rainbow
