#include "rainbow/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <unordered_set>

namespace rainbow {

namespace {

// per-edge dense color ids, 0-based, suitable for a 64-bit mask
std::map<Edge, int> dense_edge_colors(const Graph& g, const Coloring& coloring) {
  if (static_cast<int>(coloring.assignment.size()) != g.edge_count())
    throw std::invalid_argument("verifier requires a total coloring of E(G)");
  std::map<int, int> remap;
  for (const Edge& e : g.edges()) {
    const auto it = coloring.assignment.find(e);
    if (it == coloring.assignment.end())
      throw std::invalid_argument("verifier requires a total coloring of E(G)");
    if (it->second < 1) throw std::invalid_argument("colors must be positive");
    remap.emplace(it->second, 0);
  }
  if (static_cast<int>(remap.size()) > kMaxVerifierColors)
    throw CapacityError("coloring uses " + std::to_string(remap.size()) +
                        " distinct colors; the verifier state encoding caps at " +
                        std::to_string(kMaxVerifierColors));
  int next = 0;
  for (auto& [color, dense] : remap) dense = next++;
  std::map<Edge, int> result;
  for (const Edge& e : g.edges()) result.emplace(e, remap.at(coloring.assignment.at(e)));
  return result;
}

std::optional<std::vector<int>> search_pair(const Graph& g, const std::map<Edge, int>& colors,
                                            int from, int to) {
  if (from == to) return std::vector<int>{from};

  struct State {
    int vertex;
    std::uint64_t used;
    int parent;  // index into the state arena
  };
  std::vector<State> arena;
  std::vector<std::unordered_set<std::uint64_t>> visited(g.vertex_count());
  arena.push_back({from, 0, -1});
  visited[from].insert(0);

  auto finish = [&](int parent_index, int terminal) {
    std::vector<int> path{terminal};
    for (int i = parent_index; i >= 0; i = arena[i].parent) path.push_back(arena[i].vertex);
    std::reverse(path.begin(), path.end());
    // soundness: adjacency, simplicity, pairwise-distinct colors
    std::set<int> seen_colors;
    std::set<int> seen_vertices(path.begin(), path.end());
    if (seen_vertices.size() != path.size())
      throw InternalError("verifier produced a non-simple path");
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!g.has_edge(path[i], path[i + 1]))
        throw InternalError("verifier produced a non-path witness");
      if (!seen_colors.insert(colors.at(Edge(path[i], path[i + 1]))).second)
        throw InternalError("verifier produced a non-rainbow witness");
    }
    return path;
  };

  for (std::size_t head = 0; head < arena.size(); ++head) {
    const State state = arena[head];
    for (int w : g.neighbors(state.vertex)) {
      const std::uint64_t bit = std::uint64_t{1} << colors.at(Edge(state.vertex, w));
      if (state.used & bit) continue;
      if (w == to) return finish(static_cast<int>(head), w);
      const std::uint64_t used = state.used | bit;
      if (visited[w].insert(used).second)
        arena.push_back({w, used, static_cast<int>(head)});
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<int>> rainbow_path_exists(const Graph& g, const Coloring& coloring,
                                                    int u, int v) {
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw std::invalid_argument("rainbow_path_exists: unknown vertex id");
  const auto colors = dense_edge_colors(g, coloring);
  return search_pair(g, colors, u, v);
}

VerificationReport is_rainbow_connected(const Graph& g, const Coloring& coloring,
                                        const VerifyOptions& options) {
  const auto colors = dense_edge_colors(g, coloring);
  const int n = g.vertex_count();

  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);

  std::vector<std::optional<std::vector<int>>> results(pairs.size());
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || pairs.size() < 2) {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      results[i] = search_pair(g, colors, pairs[i].first, pairs[i].second);
  } else {
    std::vector<std::thread> workers;
    std::atomic<std::size_t> cursor{0};
    for (int t = 0; t < jobs; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = cursor.fetch_add(1); i < pairs.size(); i = cursor.fetch_add(1))
          results[i] = search_pair(g, colors, pairs[i].first, pairs[i].second);
      });
    }
    for (auto& worker : workers) worker.join();
  }

  VerificationReport report;
  report.checked_pairs = static_cast<long long>(pairs.size());
  report.witnesses_kept = options.keep_witnesses;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!results[i]) {
      report.failures.push_back(pairs[i]);
    } else if (options.keep_witnesses) {
      report.witnesses.emplace(pairs[i], *results[i]);
    }
  }
  report.ok = report.failures.empty();
  return report;
}

}  // namespace rainbow
