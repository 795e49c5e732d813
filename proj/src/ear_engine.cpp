#include "rainbow/ear_engine.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <utility>

namespace rainbow {

namespace {

std::vector<char> make_mask(int n, const std::vector<int>& vs) {
  std::vector<char> mask(n, 0);
  for (int v : vs) mask[v] = 1;
  return mask;
}

}  // namespace

BridgeFrontier bridge_frontier(const Graph& g, const std::vector<int>& core) {
  const LayerDecomposition layers = decompose(g, core);
  if (!is_connected(induced_subgraph(g, core).graph))
    throw std::invalid_argument("bridge_frontier: core must induce a connected subgraph");

  struct Entry {
    int frontier_vertex;
    Edge edge;
  };
  std::vector<Entry> entries;
  for (const Edge& e : find_bridges(g)) {
    const bool u_in = layers.in_core(e.u), v_in = layers.in_core(e.v);
    if (u_in == v_in) continue;
    entries.push_back({u_in ? e.v : e.u, e});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.frontier_vertex < b.frontier_vertex; });

  BridgeFrontier bf;
  for (const Entry& entry : entries) {
    const int x = entry.frontier_vertex;
    int degree_in_closed_nbhd = 0;
    for (int w : g.neighbors(x))
      if (layers.dist_to_core[w] <= 1) ++degree_in_closed_nbhd;
    if (degree_in_closed_nbhd != 1)
      throw InternalError("claim 1 violated: bridge endpoint " + std::to_string(x) +
                          " has degree " + std::to_string(degree_in_closed_nbhd) +
                          " in G[N[D]]");
    bf.frontier.push_back(x);
    bf.bridge_edges.push_back(entry.edge);
  }
  return bf;
}

std::vector<int> even_color_sequence(int p, int k, EarOrientation orientation) {
  if (k < 1) throw std::invalid_argument("stage index k must be at least 1");
  if (p < 1) throw std::invalid_argument("ear length must be positive");
  if (p > 2 * k + 1)
    throw InternalError("claim 2 violated: ear length " + std::to_string(p) +
                        " exceeds 2k+1 = " + std::to_string(2 * k + 1));
  const int up = (p + 1) / 2;
  const int down = p / 2;
  std::vector<int> seq;
  seq.reserve(p);
  for (int c = 1; c <= up; ++c) seq.push_back(c);
  for (int c = 2 * k + 2 - down; c <= 2 * k + 1; ++c) seq.push_back(c);
  if (orientation == EarOrientation::descending) std::reverse(seq.begin(), seq.end());
  return seq;
}

EarPath find_eager_ear(const Graph& g, const LayerDecomposition& layers, int seed_core,
                       int seed_frontier, const std::vector<int>& absorbed_exit_cost) {
  const int n = g.vertex_count();
  if (!g.has_edge(seed_core, seed_frontier))
    throw std::invalid_argument("seed is not an edge of the graph");
  if (!layers.in_core(seed_core) || layers.dist_to_core[seed_frontier] != 1)
    throw std::invalid_argument("seed edge must run from the core into its neighborhood");
  auto exit_cost = [&](int v) {
    return absorbed_exit_cost.empty() ? -1 : absorbed_exit_cost[v];
  };
  if (exit_cost(seed_frontier) >= 0)
    throw std::invalid_argument("seed frontier vertex is already absorbed");

  // full BFS over free vertices; the search never walks through the core
  // or through absorbed vertices, it only terminates on them
  std::vector<int> parent(n, -2);  // -2 unvisited, -1 search root
  std::vector<int> dist(n, -1);
  parent[seed_frontier] = -1;
  dist[seed_frontier] = 0;
  std::queue<int> queue;
  queue.push(seed_frontier);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int w : g.neighbors(u)) {
      if (layers.in_core(w) || exit_cost(w) >= 0) continue;
      if (parent[w] == -2) {
        parent[w] = u;
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }

  // the eager ear is the cheapest completion: a touch of the core costs its
  // own length, a touch of an absorbed vertex additionally pays the walk
  // along its host ear back to the core
  struct Candidate {
    int cost;
    bool splice;
    int last_free;
    int terminal;
  };
  std::optional<Candidate> best;
  auto consider = [&](const Candidate& candidate) {
    if (!best || std::tuple(candidate.cost, candidate.splice, candidate.last_free,
                            candidate.terminal) < std::tuple(best->cost, best->splice,
                                                             best->last_free, best->terminal))
      best = candidate;
  };
  for (int u = 0; u < n; ++u) {
    if (dist[u] < 0) continue;
    for (int w : g.neighbors(u)) {
      if (u == seed_frontier && w == seed_core) continue;  // would reuse the seed edge
      const int prefix = 1 + dist[u] + 1;
      if (layers.in_core(w)) {
        consider({prefix, false, u, w});
      } else if (exit_cost(w) >= 0) {
        consider({prefix + exit_cost(w), true, u, w});
      }
    }
  }
  if (!best)
    throw InternalError("no eager ear for the seed edge; a non-bridge seed always has one");

  std::vector<int> path;
  for (int v = best->last_free; v != -1; v = parent[v]) path.push_back(v);
  path.push_back(seed_core);
  std::reverse(path.begin(), path.end());
  path.push_back(best->terminal);
  if (!best->splice) return {std::move(path), std::nullopt};
  EarSplice splice;
  splice.prefix_len = static_cast<int>(path.size()) - 1;
  return {std::move(path), splice};
}

StageReport expand_step(const Graph& g, const std::vector<int>& core, int k,
                        Coloring& coloring, int palette_start) {
  if (k < 1) throw std::invalid_argument("expand_step requires k >= 1");
  if (palette_start < 1) throw std::invalid_argument("palette_start must be positive");
  {
    const auto pre = check_k_step_domination(g, core, k);
    if (!pre.dominating || !pre.core_connected)
      throw std::invalid_argument("core is not a connected k-step dominating set");
  }

  const int n = g.vertex_count();
  StageReport report;
  report.stage = k;
  report.core_in = core;
  std::sort(report.core_in.begin(), report.core_in.end());
  report.block_start = palette_start;

  const LayerDecomposition layers = decompose(g, core);
  const BridgeFrontier frontier = bridge_frontier(g, core);  // checks claim 1
  report.bridge_count = frontier.count();
  report.bridge_edges = frontier.bridge_edges;
  report.block_size = std::max(2 * k + 1, frontier.count());
  coloring.palette_blocks.push_back({k, palette_start, report.block_size});

  auto in_core = make_mask(n, core);
  for (int x : frontier.frontier) in_core[x] = 1;  // D_1 = D plus B

  std::set<int> used_rel;
  auto assign = [&](const Edge& e, int rel) {
    const bool inserted = coloring.assignment.emplace(e, palette_start - 1 + rel).second;
    if (!inserted) throw InternalError("edge colored twice within a stage");
    used_rel.insert(rel);
  };

  struct EarRecord {
    std::vector<int> verts;
    std::vector<int> rel;
  };
  std::vector<EarRecord> ears;
  std::vector<int> host_ear(n, -1), host_pos(n, -1);
  std::vector<int> absorbed_exit_cost(n, -1);  // shorter host-segment length

  while (true) {
    // smallest (x0, x1) over E(D, N(D) \ current core)
    int best_core = -1, best_frontier = -1;
    for (const Edge& e : g.edges()) {
      int c, f;
      if (layers.in_core(e.u) && layers.dist_to_core[e.v] == 1 && !in_core[e.v]) {
        c = e.u;
        f = e.v;
      } else if (layers.in_core(e.v) && layers.dist_to_core[e.u] == 1 && !in_core[e.u]) {
        c = e.v;
        f = e.u;
      } else {
        continue;
      }
      if (best_core < 0 || std::pair(c, f) < std::pair(best_core, best_frontier)) {
        best_core = c;
        best_frontier = f;
      }
    }
    if (best_core < 0) break;

    EarPath ear = find_eager_ear(g, layers, best_core, best_frontier, absorbed_exit_cost);
    EarOrientation orientation = EarOrientation::ascending;
    std::vector<int> rel_colors;
    int new_edges = 0;

    if (!ear.spliced_from) {
      const int p = ear.length();
      rel_colors = even_color_sequence(p, k, orientation);  // throws if p > 2k+1
      new_edges = p;
    } else {
      const int prefix_len = ear.spliced_from->prefix_len;
      const int anchor = ear.vertices.back();
      const int host = host_ear[anchor];
      if (host < 0) throw InternalError("splice anchor has no host ear");
      const EarRecord& q = ears[host];
      const int q_len = static_cast<int>(q.verts.size()) - 1;
      const int pos = host_pos[anchor];
      const int toward_front = pos, toward_back = q_len - pos;
      const bool use_front = toward_front != toward_back
                                 ? toward_front < toward_back
                                 : q.verts.front() <= q.verts.back();
      std::vector<int> suffix_colors;
      if (use_front) {
        for (int i = pos - 1; i >= 0; --i) {
          ear.vertices.push_back(q.verts[i]);
          suffix_colors.push_back(q.rel[i]);
        }
      } else {
        for (int i = pos; i < q_len; ++i) {
          ear.vertices.push_back(q.verts[i + 1]);
          suffix_colors.push_back(q.rel[i]);
        }
      }
      const int p = ear.length();
      // the grafted segment keeps its colors; the pattern ends on the
      // segment's core-side edge, whose half decides the direction
      orientation = suffix_colors.back() <= k + 1 ? EarOrientation::descending
                                                  : EarOrientation::ascending;
      const auto pattern = even_color_sequence(p, k, orientation);
      rel_colors.assign(pattern.begin(), pattern.begin() + prefix_len);
      rel_colors.insert(rel_colors.end(), suffix_colors.begin(), suffix_colors.end());
      if (rel_colors != pattern) ++report.pattern_warnings;
      const std::set<int> distinct(rel_colors.begin(), rel_colors.end());
      if (distinct.size() != rel_colors.size()) ++report.pattern_warnings;
      ear.spliced_from->host_ear = host;
      ear.spliced_from->toward_front = use_front;
      new_edges = prefix_len;
    }

    for (int i = 0; i < new_edges; ++i)
      assign(Edge(ear.vertices[i], ear.vertices[i + 1]), rel_colors[i]);

    const int ear_id = static_cast<int>(ears.size());
    const int total_len = ear.length();
    const int last_new = new_edges - 1;  // internals of the fresh prefix
    for (int i = 1; i <= last_new; ++i) {
      const int v = ear.vertices[i];
      in_core[v] = 1;
      host_ear[v] = ear_id;
      host_pos[v] = i;
      absorbed_exit_cost[v] = std::min(i, total_len - i);
    }
    ears.push_back({ear.vertices, rel_colors});
    report.ears.push_back({std::move(ear), orientation, std::move(rel_colors)});
  }

  // B_E takes block colors 1..b_k in ascending frontier-vertex order; when
  // b_k > 2k+1 the tail spills into the fresh part of the block
  for (int i = 0; i < frontier.count(); ++i) assign(frontier.bridge_edges[i], i + 1);

  // leftover new edges inside the expanded core take the block's first color
  for (const Edge& e : g.edges())
    if (in_core[e.u] && in_core[e.v] && !coloring.assignment.contains(e)) assign(e, 1);

  for (int v = 0; v < n; ++v)
    if (in_core[v]) report.core_out.push_back(v);
  report.colors_used = static_cast<int>(used_rel.size());
  if (report.colors_used > report.block_size)
    throw InternalError("stage consumed more colors than its palette block");

  const auto post = check_k_step_domination(g, report.core_out, k - 1);
  if (!post.dominating || !post.core_connected)
    throw InternalError("expansion did not produce a connected (k-1)-step dominating set");

  // claim 3, G[D'] reading: edges between newly added vertices lie on cycles of G[D']
  {
    const auto sub = induced_subgraph(g, report.core_out);
    const auto was_core = make_mask(n, core);
    for (const Edge& b : find_bridges(sub.graph)) {
      const int u = sub.to_original[b.u], v = sub.to_original[b.v];
      if (!was_core[u] && !was_core[v])
        throw InternalError("claim 3 violated: bridge of G[D'] between new vertices " +
                            std::to_string(u) + "-" + std::to_string(v));
    }
    std::vector<int> fresh;
    for (int v : report.core_out)
      if (!was_core[v]) fresh.push_back(v);
    if (!fresh.empty()) {
      const auto fresh_sub = induced_subgraph(g, fresh);
      report.claim3_induced_bridges = static_cast<int>(find_bridges(fresh_sub.graph).size());
    }
  }
  return report;
}

}  // namespace rainbow
