#include "rainbow/generators.hpp"

#include <algorithm>
#include <random>

namespace rainbow {

namespace {

// mt19937_64 output is standardized, so derived values are portable
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph make_path(int n) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph make_star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

Graph make_theta(const std::vector<int>& arms) {
  if (arms.size() < 2) throw std::invalid_argument("theta needs at least two arms");
  int unit_arms = 0;
  for (int len : arms) {
    if (len < 1) throw std::invalid_argument("theta arm lengths must be >= 1");
    if (len == 1) ++unit_arms;
  }
  if (unit_arms > 1)
    throw std::invalid_argument("theta allows at most one arm of length 1");
  std::vector<Edge> edges;
  int next_id = 2;  // 0 and 1 are the junctions
  for (int len : arms) {
    int previous = 0;
    for (int step = 1; step < len; ++step) {
      edges.emplace_back(previous, next_id);
      previous = next_id++;
    }
    edges.emplace_back(previous, 1);
  }
  return Graph::from_edges(next_id, edges);
}

Graph make_random_connected(int n, double p, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_connected needs n >= 2");
  if (p <= 0.0 || p > 1.0) throw std::invalid_argument("random_connected needs 0 < p <= 1");
  std::mt19937_64 rng(seed);
  constexpr int kMaxAttempts = 2000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (unit_double(rng) < p) edges.emplace_back(u, v);
    if (edges.empty()) continue;
    Graph g = Graph::from_edges(n, edges);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_connected: no connected sample within the attempt budget");
}

Graph make_random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random_tree needs n >= 2");
  if (n == 2) return Graph::from_edges(2, {Edge(0, 1)});
  std::mt19937_64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (int& value : pruefer) value = static_cast<int>(rng() % static_cast<std::uint64_t>(n));

  std::vector<int> degree(n, 1);
  for (int value : pruefer) ++degree[value];
  std::vector<Edge> edges;
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int value : pruefer) {
    edges.emplace_back(leaf, value);
    if (--degree[value] == 1 && value < ptr) {
      leaf = value;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph::from_edges(n, edges);
}

Graph make_barbell(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("barbell_bridge needs both sizes >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = u + 1; v < a; ++v) edges.emplace_back(u, v);
  for (int u = a; u < a + b; ++u)
    for (int v = u + 1; v < a + b; ++v) edges.emplace_back(u, v);
  edges.emplace_back(a - 1, a);
  return Graph::from_edges(a + b, edges);
}

Graph make_cycle_with_pendants(int n, const std::vector<int>& attach) {
  if (n < 3) throw std::invalid_argument("cycle_with_pendants needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  int next_id = n;
  for (int anchor : attach) {
    if (anchor < 0 || anchor >= n)
      throw std::invalid_argument("pendant anchor out of range");
    edges.emplace_back(anchor, next_id++);
  }
  return Graph::from_edges(next_id, edges);
}

}  // namespace

const char* family_name(Family family) {
  switch (family) {
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::star: return "star";
    case Family::theta: return "theta";
    case Family::random_connected: return "random_connected";
    case Family::random_tree: return "random_tree";
    case Family::barbell_bridge: return "barbell_bridge";
    case Family::cycle_with_pendants: return "cycle_with_pendants";
  }
  return "unknown";
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::cycle: return make_cycle(spec.n);
    case Family::path: return make_path(spec.n);
    case Family::star: return make_star(spec.n);
    case Family::theta: return make_theta(spec.arms);
    case Family::random_connected: return make_random_connected(spec.n, spec.p, spec.seed);
    case Family::random_tree: return make_random_tree(spec.n, spec.seed);
    case Family::barbell_bridge: return make_barbell(spec.a, spec.b);
    case Family::cycle_with_pendants: return make_cycle_with_pendants(spec.n, spec.attach);
  }
  throw std::invalid_argument("unknown graph family");
}

}  // namespace rainbow
