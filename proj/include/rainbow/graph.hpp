#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

// Input could not be parsed (edge-list or coloring text).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation that requires a connected graph was given a disconnected one.
struct ConnectivityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A declared capacity limit (edge cap, color cap, time budget) was exceeded.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A proven invariant failed at runtime; always an implementation bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Undirected edge, normalized so u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("self-loop edge " + std::to_string(a));
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable after construction; safe to share across threads.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;
  bool has_vertex(int v) const { return v >= 0 && v < n_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;             // sorted
  std::vector<std::vector<int>> adj_;   // each list sorted ascending
};

/// Per-vertex eccentricities plus the derived radius/diameter/center data.
struct Metrics {
  std::vector<int> eccentricities;
  int radius = 0;
  int diameter = 0;
  std::vector<int> centers;  // all vertices achieving the radius, ascending
};

/// Parses "u v" lines (decimal ids, whitespace-separated, '#' comments).
Graph parse_edge_list(std::istream& in);

bool is_connected(const Graph& g);

/// Hop distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

Metrics radius_center(const Graph& g);

/// All bridges of g (low-link traversal), sorted. Works per component.
std::vector<Edge> find_bridges(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;  // new id -> original id
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

/// Edges with one endpoint in xs and the other in ys; the sets must be disjoint.
std::vector<Edge> cut_edges(const Graph& g, const std::vector<int>& xs,
                            const std::vector<int>& ys);

}  // namespace rainbow
