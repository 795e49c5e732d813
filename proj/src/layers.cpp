#include "rainbow/layers.hpp"

#include <algorithm>
#include <queue>

namespace rainbow {

namespace {

std::vector<int> multi_source_distances(const Graph& g, const std::vector<int>& sources) {
  if (sources.empty()) throw std::invalid_argument("source set must be nonempty");
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> queue;
  for (int v : sources) {
    if (!g.has_vertex(v)) throw std::invalid_argument("unknown vertex id in source set");
    if (dist[v] == 0) continue;
    dist[v] = 0;
    queue.push(v);
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<int> k_step_neighborhood(const Graph& g, const std::vector<int>& s, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const auto dist = multi_source_distances(g, s);
  std::vector<int> result;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (dist[v] == k) result.push_back(v);
  return result;
}

LayerDecomposition decompose(const Graph& g, const std::vector<int>& core) {
  LayerDecomposition d;
  d.dist_to_core = multi_source_distances(g, core);
  d.step = *std::max_element(d.dist_to_core.begin(), d.dist_to_core.end());
  d.layers.assign(d.step + 1, {});
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (d.dist_to_core[v] < 0)
      throw ConnectivityError("decompose requires every vertex reachable from the core");
    d.layers[d.dist_to_core[v]].push_back(v);
  }
  d.core = d.layers[0];
  return d;
}

DominationCheck check_k_step_domination(const Graph& g, const std::vector<int>& s, int k) {
  const auto dist = multi_source_distances(g, s);
  DominationCheck check;
  check.dominating =
      std::none_of(dist.begin(), dist.end(), [k](int d) { return d < 0 || d > k; });

  std::vector<int> ids = s;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  const auto sub = induced_subgraph(g, ids);
  check.core_connected = is_connected(sub.graph);
  return check;
}

}  // namespace rainbow
