#pragma once

#include "rainbow/graph.hpp"

namespace rainbow {

struct OracleLimits {
  int max_edges = 9;
  int max_colors = 16;
  double time_budget_seconds = 60.0;
};

/// max(diameter, bridge count): every rainbow coloring needs at least diam
/// colors, and bridges must be pairwise distinct. Equals m on trees.
int rc_lower_bound(const Graph& g);

/// Smallest t for which some t-coloring makes g rainbow connected, by
/// exhaustive search from the lower bound upward. Refuses over-budget input.
int exact_rc(const Graph& g, const OracleLimits& limits = {});

}  // namespace rainbow
