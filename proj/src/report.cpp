#include "rainbow/report.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace rainbow {

void write_report(std::ostream& out, const RunReport& report) {
  out << "rainbow.report 1\n";
  out << "input.n " << report.n << "\n";
  out << "input.m " << report.m << "\n";

  if (report.has_metrics) {
    out << "metrics.radius " << report.metrics.radius << "\n";
    out << "metrics.diameter " << report.metrics.diameter << "\n";
    out << "metrics.center_count " << report.metrics.centers.size() << "\n";
    out << "metrics.centers";
    for (int c : report.metrics.centers) out << ' ' << c;
    out << "\n";
    out << "metrics.bridge_count " << report.bridges.size() << "\n";
    out << "metrics.bridges";
    for (const Edge& e : report.bridges) out << ' ' << e.u << '-' << e.v;
    out << "\n";
  }

  if (report.has_build) {
    out << "build.center " << report.center << "\n";
    out << "build.radius " << report.radius << "\n";
    out << "build.stage_count " << report.stages.size() << "\n";
    for (const StageReport& stage : report.stages) {
      const std::string prefix = "stage." + std::to_string(stage.stage) + ".";
      out << prefix << "bridges " << stage.bridge_count << "\n";
      out << prefix << "block_start " << stage.block_start << "\n";
      out << prefix << "block_size " << stage.block_size << "\n";
      out << prefix << "colors_used " << stage.colors_used << "\n";
      out << prefix << "ears " << stage.ears.size() << "\n";
      out << prefix << "warnings " << stage.pattern_warnings << "\n";
      out << prefix << "claim3_induced_bridges " << stage.claim3_induced_bridges << "\n";
    }
    out << "build.bound " << report.bound << "\n";
    out << "build.colors_used " << report.colors_used << "\n";
    out << "build.corollary1 " << (report.corollary1 ? "true" : "false") << "\n";
  }

  if (report.has_verify) {
    out << "verify.ok " << (report.verify_ok ? "true" : "false") << "\n";
    out << "verify.checked_pairs " << report.checked_pairs << "\n";
    out << "verify.failure_count " << report.failures.size() << "\n";
    for (const auto& [u, v] : report.failures) out << "verify.failure " << u << ' ' << v << "\n";
    for (const auto& [pair, path] : report.witnesses) {
      out << "witness " << pair.first << ' ' << pair.second << " :";
      for (int v : path) out << ' ' << v;
      out << "\n";
    }
  }

  if (report.emit_timings) {
    for (const auto& [phase, seconds] : report.timings)
      out << "timing." << phase << ' ' << std::fixed << std::setprecision(6) << seconds << "\n";
  }
}

void write_coloring(std::ostream& out, const Graph& g, const Coloring& coloring) {
  for (const Edge& e : g.edges()) {
    const auto it = coloring.assignment.find(e);
    if (it == coloring.assignment.end())
      throw std::invalid_argument("write_coloring: coloring is not total");
    out << e.u << ' ' << e.v << ' ' << it->second << '\n';
  }
}

Coloring read_coloring(std::istream& in, const Graph& g) {
  Coloring coloring;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    std::istringstream fields(line);
    long long u = -1, v = -1, color = -1;
    std::string extra;
    if (!(fields >> u >> v >> color) || (fields >> extra))
      throw ParseError("coloring line " + std::to_string(line_no) + ": expected 'u v c'");
    if (u < 0 || v < 0 || u == v || u >= g.vertex_count() || v >= g.vertex_count())
      throw ParseError("coloring line " + std::to_string(line_no) + ": bad edge endpoints");
    if (color > 1000000000)
      throw ParseError("coloring line " + std::to_string(line_no) + ": color out of range");
    if (!g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("coloring line " + std::to_string(line_no) + ": not an edge of the graph");
    if (color < 1)
      throw ParseError("coloring line " + std::to_string(line_no) + ": colors must be >= 1");
    const Edge e(static_cast<int>(u), static_cast<int>(v));
    if (!coloring.assignment.emplace(e, static_cast<int>(color)).second)
      throw ParseError("coloring line " + std::to_string(line_no) + ": duplicate edge");
  }
  if (static_cast<int>(coloring.assignment.size()) != g.edge_count())
    throw ParseError("coloring covers " + std::to_string(coloring.assignment.size()) +
                     " of " + std::to_string(g.edge_count()) + " edges");
  return coloring;
}

}  // namespace rainbow
