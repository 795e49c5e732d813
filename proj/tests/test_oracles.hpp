#pragma once

// Brute-force reference implementations used only by tests. They stay
// independent of the library code paths they cross-check.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "rainbow/ear_engine.hpp"
#include "rainbow/graph.hpp"

namespace brute {

// Bridge = edge whose removal disconnects its endpoints.
inline std::vector<rainbow::Edge> bridges_by_removal(const rainbow::Graph& g) {
  std::vector<rainbow::Edge> bridges;
  for (const rainbow::Edge& skip : g.edges()) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<int> queue;
    seen[skip.u] = 1;
    queue.push(skip.u);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int w : g.neighbors(u)) {
        if ((u == skip.u && w == skip.v) || (u == skip.v && w == skip.u)) continue;
        if (!seen[w]) {
          seen[w] = 1;
          queue.push(w);
        }
      }
    }
    if (!seen[skip.v]) bridges.push_back(skip);
  }
  return bridges;
}

// Any simple u-v path with pairwise distinct edge colors?
inline bool rainbow_pair_by_enumeration(const rainbow::Graph& g,
                                        const std::map<rainbow::Edge, int>& colors, int from,
                                        int to) {
  if (from == to) return true;
  std::vector<char> on_path(g.vertex_count(), 0);
  std::vector<int> path_colors;
  bool found = false;

  auto dfs = [&](auto&& self, int at) -> void {
    if (found) return;
    if (at == to) {
      std::set<int> distinct(path_colors.begin(), path_colors.end());
      if (distinct.size() == path_colors.size()) found = true;
      return;
    }
    for (int w : g.neighbors(at)) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      path_colors.push_back(colors.at(rainbow::Edge(at, w)));
      self(self, w);
      path_colors.pop_back();
      on_path[w] = 0;
    }
  };
  on_path[from] = 1;
  dfs(dfs, from);
  return found;
}

inline std::map<rainbow::Edge, int> as_edge_colors(const rainbow::Coloring& coloring) {
  return coloring.assignment;
}

// Shortest core ear through the oriented seed edge, by exhaustive path
// enumeration: internal vertices outside core-and-absorbed, terminating on
// the first vertex of core-or-absorbed reached. Returns -1 if none exists.
inline int shortest_ear_by_enumeration(const rainbow::Graph& g, const std::vector<char>& in_core,
                                       const std::vector<char>& absorbed, int seed_core,
                                       int seed_frontier) {
  int best = -1;
  std::vector<char> on_path(g.vertex_count(), 0);

  auto dfs = [&](auto&& self, int at, int length) -> void {
    for (int w : g.neighbors(at)) {
      if (at == seed_frontier && w == seed_core) continue;
      if (in_core[w] || absorbed[w]) {
        if (best < 0 || length + 1 < best) best = length + 1;
        continue;
      }
      if (on_path[w]) continue;
      if (best >= 0 && length + 1 >= best) continue;
      on_path[w] = 1;
      self(self, w, length + 1);
      on_path[w] = 0;
    }
  };
  on_path[seed_frontier] = 1;
  dfs(dfs, seed_frontier, 1);
  return best;
}

// Exact rc(G) with the spec's literal first-edge-fixed enumeration and the
// simple-path verifier above; usable only for very small graphs.
inline int exact_rc_by_enumeration(const rainbow::Graph& g) {
  const int m = g.edge_count();
  if (m == 0) return 0;
  const auto& edges = g.edges();
  std::vector<int> colors(m, 1);

  auto works = [&]() {
    std::map<rainbow::Edge, int> assignment;
    for (int i = 0; i < m; ++i) assignment.emplace(edges[i], colors[i]);
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v)
        if (!rainbow_pair_by_enumeration(g, assignment, u, v)) return false;
    return true;
  };

  for (int t = 1; t <= m; ++t) {
    std::fill(colors.begin(), colors.end(), 1);
    while (true) {
      if (works()) return t;
      int index = m - 1;
      while (index >= 1 && colors[index] == t) {
        colors[index] = 1;
        --index;
      }
      if (index == 0) break;  // first edge stays color 1
      ++colors[index];
    }
  }
  return m;
}

}  // namespace brute
