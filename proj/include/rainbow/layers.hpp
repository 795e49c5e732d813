#pragma once

#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Partition of V into N^0(core), N^1(core), ..., N^step(core) by distance
/// to the core set. dist_to_core gives constant-time layer lookup.
struct LayerDecomposition {
  std::vector<int> core;                // sorted
  std::vector<std::vector<int>> layers; // layers[i] = vertices at distance i, sorted
  std::vector<int> dist_to_core;        // per vertex; -1 if unreachable
  int step = 0;                         // max distance over reachable vertices

  bool in_core(int v) const { return dist_to_core[v] == 0; }
};

/// Vertices at distance exactly k from s (multi-source BFS).
std::vector<int> k_step_neighborhood(const Graph& g, const std::vector<int>& s, int k);

LayerDecomposition decompose(const Graph& g, const std::vector<int>& core);

struct DominationCheck {
  bool dominating = false;      // every vertex within distance k of s
  bool core_connected = false;  // G[s] is connected
};

DominationCheck check_k_step_domination(const Graph& g, const std::vector<int>& s, int k);

inline bool is_k_step_dominating(const Graph& g, const std::vector<int>& s, int k) {
  return check_k_step_domination(g, s, k).dominating;
}

}  // namespace rainbow
