#include "rainbow/graph.hpp"

#include <algorithm>
#include <istream>
#include <queue>
#include <sstream>

namespace rainbow {

namespace {

bool all_digits(const std::string& tok) {
  if (tok.empty()) return false;
  for (char c : tok)
    if (c < '0' || c > '9') return false;
  return true;
}

int parse_vertex_token(const std::string& tok, int line_no) {
  if (!all_digits(tok))
    throw ParseError("line " + std::to_string(line_no) + ": '" + tok +
                     "' is not a nonnegative integer");
  try {
    long long value = std::stoll(tok);
    if (value > static_cast<long long>(1) << 30)
      throw ParseError("line " + std::to_string(line_no) + ": vertex id too large");
    return static_cast<int>(value);
  } catch (const std::out_of_range&) {
    throw ParseError("line " + std::to_string(line_no) + ": vertex id too large");
  }
}

}  // namespace

Graph Graph::from_edges(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.n_ = vertex_count;
  g.edges_ = edges;
  std::sort(g.edges_.begin(), g.edges_.end());
  if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
    throw std::invalid_argument("duplicate edge");
  g.adj_.resize(vertex_count);
  for (const Edge& e : g.edges_) {
    if (e.u < 0 || e.v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (!has_vertex(v)) throw std::invalid_argument("vertex id out of range");
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  int max_id = -1;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty())
      throw ParseError("line " + std::to_string(line_no) + ": expected two vertex ids");
    if (fields >> extra)
      throw ParseError("line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
    const int u = parse_vertex_token(a, line_no);
    const int v = parse_vertex_token(b, line_no);
    if (u == v)
      throw ParseError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                       std::to_string(u));
    edges.emplace_back(u, v);
    max_id = std::max({max_id, u, v});
  }
  if (edges.empty()) throw ParseError("empty input: no edges");
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
    throw ParseError("duplicate edge " + std::to_string(it->u) + " " + std::to_string(it->v));
  return Graph::from_edges(max_id + 1, edges);
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  if (!g.has_vertex(source)) throw std::invalid_argument("invalid BFS source id");
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
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

Metrics radius_center(const Graph& g) {
  if (!is_connected(g)) throw ConnectivityError("radius_center requires a connected graph");
  const int n = g.vertex_count();
  Metrics m;
  m.eccentricities.resize(n, 0);
  for (int v = 0; v < n; ++v) {
    const auto dist = bfs_distances(g, v);
    m.eccentricities[v] = *std::max_element(dist.begin(), dist.end());
  }
  m.radius = *std::min_element(m.eccentricities.begin(), m.eccentricities.end());
  m.diameter = *std::max_element(m.eccentricities.begin(), m.eccentricities.end());
  for (int v = 0; v < n; ++v)
    if (m.eccentricities[v] == m.radius) m.centers.push_back(v);
  return m;
}

std::vector<Edge> find_bridges(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next(n, 0);
  std::vector<Edge> bridges;
  int timer = 0;
  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<int> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      const int u = stack.back();
      const auto& adj = g.neighbors(u);
      if (next[u] < static_cast<int>(adj.size())) {
        const int w = adj[next[u]++];
        if (disc[w] < 0) {
          parent[w] = u;
          disc[w] = low[w] = timer++;
          stack.push_back(w);
        } else if (w != parent[u]) {
          low[u] = std::min(low[u], disc[w]);
        }
      } else {
        stack.pop_back();
        const int p = parent[u];
        if (p >= 0) {
          low[p] = std::min(low[p], low[u]);
          if (low[u] > disc[p]) bridges.emplace_back(p, u);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
  std::vector<int> ids = keep;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int v : ids)
    if (!g.has_vertex(v))
      throw std::invalid_argument("induced_subgraph: unknown vertex id " + std::to_string(v));
  std::vector<int> new_id(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) new_id[ids[i]] = i;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0) edges.emplace_back(new_id[e.u], new_id[e.v]);
  InducedSubgraph result;
  result.graph = Graph::from_edges(static_cast<int>(ids.size()), edges);
  result.to_original = ids;
  return result;
}

std::vector<Edge> cut_edges(const Graph& g, const std::vector<int>& xs,
                            const std::vector<int>& ys) {
  std::vector<char> in_x(g.vertex_count(), 0), in_y(g.vertex_count(), 0);
  for (int v : xs) {
    if (!g.has_vertex(v)) throw std::invalid_argument("cut_edges: unknown vertex id");
    in_x[v] = 1;
  }
  for (int v : ys) {
    if (!g.has_vertex(v)) throw std::invalid_argument("cut_edges: unknown vertex id");
    if (in_x[v])
      throw std::invalid_argument("cut_edges: sets intersect at vertex " + std::to_string(v));
    in_y[v] = 1;
  }
  std::vector<Edge> result;
  for (const Edge& e : g.edges())
    if ((in_x[e.u] && in_y[e.v]) || (in_y[e.u] && in_x[e.v])) result.push_back(e);
  return result;
}

}  // namespace rainbow
