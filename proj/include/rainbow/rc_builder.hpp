#pragma once

#include <vector>

#include "rainbow/ear_engine.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

/// Output of the full construction: a total coloring of E(G) together with
/// the guaranteed budget sum over stages max(2i+1, b_i).
struct RcResult {
  Coloring coloring;
  int bound = 0;
  int colors_used = 0;
  std::vector<StageReport> stages;  // k = radius down to 1
  int center = -1;
  int radius = 0;
};

/// Seeds the core at the smallest-id center and expands level by level.
RcResult build(const Graph& g);

struct BoundBreakdown {
  int bound = 0;
  std::vector<int> bridges_by_level;  // bridges_by_level[i-1] = b_i
};

/// The budget and the b_i sequence along the same core chain as build,
/// without keeping the coloring.
BoundBreakdown theorem2_bound(const Graph& g);

/// True iff the per-stage bridge counts sum to the bridge count of g.
bool corollary1_check(const Graph& g, const std::vector<StageReport>& stages);

}  // namespace rainbow
