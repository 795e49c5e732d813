#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/layers.hpp"

namespace rainbow {

/// Frontier vertices whose unique edge into the core is a bridge of G.
/// Every member has degree exactly 1 in G[N[core]]; bridge_frontier checks
/// that at runtime and refuses to continue if it fails.
struct BridgeFrontier {
  std::vector<int> frontier;       // B, ascending
  std::vector<Edge> bridge_edges;  // B_E, aligned with frontier
  int count() const { return static_cast<int>(frontier.size()); }
};

enum class EarOrientation { ascending, descending };

struct EarSplice {
  int prefix_len = 0;        // edges of the newly searched prefix P1
  int host_ear = -1;         // index of the ear the suffix was borrowed from
  bool toward_front = true;  // host segment walked toward its front endpoint
};

/// A core ear: endpoints in the core, internal vertices outside it.
/// The closed case vertices.front() == vertices.back() is permitted.
struct EarPath {
  std::vector<int> vertices;
  std::optional<EarSplice> spliced_from;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct PaletteBlock {
  int stage = 0;  // k
  int start = 0;  // first global color of the block
  int size = 0;   // max(2k+1, b_k)
};

/// Edge coloring under construction; colors are positive global integers.
struct Coloring {
  std::map<Edge, int> assignment;
  std::vector<PaletteBlock> palette_blocks;
};

struct ColoredEar {
  EarPath path;
  EarOrientation orientation = EarOrientation::ascending;
  std::vector<int> block_colors;  // per edge, relative to the stage block (1-based)
};

/// Everything one expansion level did, for reporting and re-verification.
struct StageReport {
  int stage = 0;  // k
  int bridge_count = 0;
  std::vector<Edge> bridge_edges;
  std::vector<ColoredEar> ears;
  int block_start = 0;
  int block_size = 0;
  int colors_used = 0;
  std::vector<int> core_in;
  std::vector<int> core_out;
  int pattern_warnings = 0;         // spliced ears whose joint sequence left the even pattern
  int claim3_induced_bridges = 0;   // informational: bridges of G[core_out \ core_in] itself
};

BridgeFrontier bridge_frontier(const Graph& g, const std::vector<int>& core);

/// The even pattern over a (2k+1)-color palette: ascending is
/// 1..ceil(p/2) followed by 2k+2-floor(p/2)..2k+1; descending is the reverse.
std::vector<int> even_color_sequence(int p, int k, EarOrientation orientation);

/// The cheapest ear completion for the oriented seed edge: internal vertices
/// stay outside core-and-absorbed, and the ear ends on the first core or
/// absorbed vertex of the cheapest route. A route ending on an absorbed
/// vertex pays that vertex's exit cost (its shorter host-ear segment), so the
/// choice minimizes the final spliced length. absorbed_exit_cost holds -1 for
/// free vertices; an empty vector means nothing is absorbed yet. A splice
/// result carries the prefix only (host_ear left unresolved).
EarPath find_eager_ear(const Graph& g, const LayerDecomposition& layers, int seed_core,
                       int seed_frontier, const std::vector<int>& absorbed_exit_cost);

/// One expansion level D^k -> D^(k-1): bridge frontier, eager ears with even
/// coloring, B_E coloring, filler color for leftover internal edges.
/// Consumes at most max(2k+1, b_k) colors from the block at palette_start.
StageReport expand_step(const Graph& g, const std::vector<int>& core, int k,
                        Coloring& coloring, int palette_start);

}  // namespace rainbow
