#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rainbow/ear_engine.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// Capacity of the color-set state encoding; applies to distinct colors used,
// not to the numeric color values.
inline constexpr int kMaxVerifierColors = 64;

struct VerificationReport {
  bool ok = false;
  long long checked_pairs = 0;
  std::vector<std::pair<int, int>> failures;  // lexicographic
  bool witnesses_kept = false;
  std::map<std::pair<int, int>, std::vector<int>> witnesses;
};

struct VerifyOptions {
  bool keep_witnesses = false;
  int jobs = 1;
};

/// Shortest u-v path whose edge colors are pairwise distinct, if any;
/// breadth-first over (vertex, used-color-set) states.
std::optional<std::vector<int>> rainbow_path_exists(const Graph& g, const Coloring& coloring,
                                                    int u, int v);

/// Runs the pair check over all unordered pairs.
VerificationReport is_rainbow_connected(const Graph& g, const Coloring& coloring,
                                        const VerifyOptions& options = {});

}  // namespace rainbow
