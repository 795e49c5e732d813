#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rainbow/generators.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/rc_builder.hpp"
#include "rainbow/report.hpp"
#include "rainbow/verifier.hpp"

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitConnectivity = 3;
constexpr int kExitCapacity = 4;
constexpr int kExitVerifyFailed = 5;

struct PhaseClock {
  std::vector<std::pair<std::string, double>> timings;

  template <typename Fn>
  auto time(const std::string& phase, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto result = fn();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    timings.emplace_back(phase, elapsed.count());
    return result;
  }
};

rainbow::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw rainbow::ParseError("cannot open input file: " + path);
  return rainbow::parse_edge_list(in);
}

rainbow::Graph load_connected_graph(const std::string& path) {
  rainbow::Graph g = load_graph(path);
  if (!rainbow::is_connected(g))
    throw rainbow::ConnectivityError("input graph is not connected");
  return g;
}

int cmd_metrics(const std::string& input) {
  const rainbow::Graph g = load_connected_graph(input);
  rainbow::RunReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.has_metrics = true;
  report.metrics = rainbow::radius_center(g);
  report.bridges = rainbow::find_bridges(g);
  rainbow::write_report(std::cout, report);
  return 0;
}

int cmd_bound(const std::string& input) {
  const rainbow::Graph g = load_connected_graph(input);
  const rainbow::BoundBreakdown breakdown = rainbow::theorem2_bound(g);
  std::cout << "bound.total " << breakdown.bound << "\n";
  std::cout << "bound.levels " << breakdown.bridges_by_level.size() << "\n";
  for (std::size_t i = 0; i < breakdown.bridges_by_level.size(); ++i)
    std::cout << "bound.b." << i + 1 << ' ' << breakdown.bridges_by_level[i] << "\n";
  return 0;
}

int cmd_color(const std::string& input, bool verify, bool witnesses, int jobs, bool timings) {
  PhaseClock clock;
  const rainbow::Graph g = clock.time("parse", [&] { return load_connected_graph(input); });
  const rainbow::RcResult result = clock.time("build", [&] { return rainbow::build(g); });

  rainbow::RunReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.has_metrics = true;
  report.metrics = clock.time("metrics", [&] { return rainbow::radius_center(g); });
  report.bridges = rainbow::find_bridges(g);
  report.has_build = true;
  report.center = result.center;
  report.radius = result.radius;
  report.bound = result.bound;
  report.colors_used = result.colors_used;
  report.corollary1 = rainbow::corollary1_check(g, result.stages);
  report.stages = result.stages;

  bool verify_ok = true;
  if (verify) {
    rainbow::VerifyOptions options;
    options.keep_witnesses = witnesses;
    options.jobs = jobs;
    const rainbow::VerificationReport vr =
        clock.time("verify", [&] { return rainbow::is_rainbow_connected(g, result.coloring, options); });
    report.has_verify = true;
    report.verify_ok = vr.ok;
    report.checked_pairs = vr.checked_pairs;
    report.failures = vr.failures;
    for (const auto& [pair, path] : vr.witnesses) report.witnesses.emplace_back(pair, path);
    verify_ok = vr.ok;
  }

  rainbow::write_coloring(std::cout, g, result.coloring);
  report.emit_timings = timings;
  report.timings = clock.timings;
  rainbow::write_report(std::cerr, report);
  return verify_ok ? 0 : kExitVerifyFailed;
}

int cmd_verify(const std::string& input, const std::string& coloring_path, bool witnesses,
               int jobs) {
  const rainbow::Graph g = load_connected_graph(input);
  std::ifstream in(coloring_path);
  if (!in) throw rainbow::ParseError("cannot open coloring file: " + coloring_path);
  const rainbow::Coloring coloring = rainbow::read_coloring(in, g);

  rainbow::VerifyOptions options;
  options.keep_witnesses = witnesses;
  options.jobs = jobs;
  const rainbow::VerificationReport vr = rainbow::is_rainbow_connected(g, coloring, options);

  rainbow::RunReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.has_verify = true;
  report.verify_ok = vr.ok;
  report.checked_pairs = vr.checked_pairs;
  report.failures = vr.failures;
  for (const auto& [pair, path] : vr.witnesses) report.witnesses.emplace_back(pair, path);
  rainbow::write_report(std::cout, report);
  return vr.ok ? 0 : kExitVerifyFailed;
}

int cmd_exact(const std::string& input, int max_edges, double time_budget) {
  const rainbow::Graph g = load_connected_graph(input);
  rainbow::OracleLimits limits;
  limits.max_edges = max_edges;
  limits.time_budget_seconds = time_budget;
  limits.max_colors = std::max(limits.max_colors, max_edges);
  std::cout << rainbow::exact_rc(g, limits) << "\n";
  return 0;
}

int cmd_gen(const rainbow::FamilySpec& spec) {
  const rainbow::Graph g = rainbow::generate(spec);
  for (const rainbow::Edge& e : g.edges()) std::cout << e.u << ' ' << e.v << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constructive rainbow-connection coloring toolkit"};
  app.require_subcommand(1);

  std::string input, coloring_path;
  bool verify = false, witnesses = false, timings = false;
  int jobs = 1;
  int max_edges = 9;
  double time_budget = 60.0;

  auto* metrics = app.add_subcommand("metrics", "print n, m, radius, diameter, centers, bridges");
  metrics->add_option("--input", input, "edge-list file")->required();

  auto* bound = app.add_subcommand("bound", "print the budget sum and per-level bridge counts");
  bound->add_option("--input", input, "edge-list file")->required();

  auto* color = app.add_subcommand("color", "construct a coloring (edges to stdout, report to stderr)");
  color->add_option("--input", input, "edge-list file")->required();
  color->add_flag("--verify", verify, "certify the coloring with the rainbow verifier");
  color->add_flag("--witnesses", witnesses, "keep one rainbow path per pair in the report");
  color->add_option("--jobs", jobs, "worker threads for verification");
  color->add_flag("--timings", timings, "append phase timings to the report");

  auto* verify_cmd = app.add_subcommand("verify", "check a coloring file for rainbow connectivity");
  verify_cmd->add_option("--input", input, "edge-list file")->required();
  verify_cmd->add_option("--coloring", coloring_path, "coloring file ('u v c' lines)")->required();
  verify_cmd->add_flag("--witnesses", witnesses, "keep one rainbow path per pair in the report");
  verify_cmd->add_option("--jobs", jobs, "worker threads for verification");

  auto* exact = app.add_subcommand("exact", "exact rc(G) by exhaustive search (small graphs)");
  exact->add_option("--input", input, "edge-list file")->required();
  exact->add_option("--max-edges", max_edges, "edge cap for the oracle");
  exact->add_option("--time-budget", time_budget, "seconds before the oracle refuses");

  rainbow::FamilySpec spec;
  std::string family;
  auto* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
  gen->add_option("family", family,
                  "cycle|path|star|theta|random_connected|random_tree|barbell_bridge|cycle_with_pendants")
      ->required();
  gen->add_option("--n", spec.n, "size parameter (vertices; leaves for star)");
  gen->add_option("--p", spec.p, "edge probability for random_connected");
  gen->add_option("--seed", spec.seed, "seed for randomized families");
  gen->add_option("--arms", spec.arms, "theta arm lengths")->delimiter(',');
  gen->add_option("--attach", spec.attach, "cycle positions receiving a pendant")->delimiter(',');
  gen->add_option("--a", spec.a, "barbell first clique size");
  gen->add_option("--b", spec.b, "barbell second clique size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints the usage message; --help exits 0
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (metrics->parsed()) return cmd_metrics(input);
    if (bound->parsed()) return cmd_bound(input);
    if (color->parsed()) return cmd_color(input, verify, witnesses, jobs, timings);
    if (verify_cmd->parsed()) return cmd_verify(input, coloring_path, witnesses, jobs);
    if (exact->parsed()) return cmd_exact(input, max_edges, time_budget);
    if (gen->parsed()) {
      static const std::map<std::string, rainbow::Family> families = {
          {"cycle", rainbow::Family::cycle},
          {"path", rainbow::Family::path},
          {"star", rainbow::Family::star},
          {"theta", rainbow::Family::theta},
          {"random_connected", rainbow::Family::random_connected},
          {"random_tree", rainbow::Family::random_tree},
          {"barbell_bridge", rainbow::Family::barbell_bridge},
          {"cycle_with_pendants", rainbow::Family::cycle_with_pendants},
      };
      const auto it = families.find(family);
      if (it == families.end()) throw std::invalid_argument("unknown family: " + family);
      spec.family = it->second;
      return cmd_gen(spec);
    }
  } catch (const rainbow::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const rainbow::ConnectivityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConnectivity;
  } catch (const rainbow::CapacityError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
