#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rc_builder.hpp"
#include "rainbow/verifier.hpp"

namespace rainbow {

/// Flat key/value document describing one run; field set and order are
/// stable so regression tests can diff reports byte for byte.
struct RunReport {
  int n = 0;
  int m = 0;

  bool has_metrics = false;
  Metrics metrics;
  std::vector<Edge> bridges;

  bool has_build = false;
  int center = -1;
  int radius = 0;
  int bound = 0;
  int colors_used = 0;
  bool corollary1 = false;
  std::vector<StageReport> stages;

  bool has_verify = false;
  bool verify_ok = false;
  long long checked_pairs = 0;
  std::vector<std::pair<int, int>> failures;
  std::vector<std::pair<std::pair<int, int>, std::vector<int>>> witnesses;

  bool emit_timings = false;
  std::vector<std::pair<std::string, double>> timings;
};

void write_report(std::ostream& out, const RunReport& report);

/// One "u v c" line per edge in sorted edge order.
void write_coloring(std::ostream& out, const Graph& g, const Coloring& coloring);

/// Reads "u v c" lines; requires every edge of g exactly once, colors >= 1.
Coloring read_coloring(std::istream& in, const Graph& g);

}  // namespace rainbow
