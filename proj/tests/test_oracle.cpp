#include <doctest.h>

#include "corpus.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/rc_builder.hpp"
#include "test_oracles.hpp"

using namespace rainbow;

TEST_CASE("rc_lower_bound spot values") {
  CHECK(rc_lower_bound(generate({.family = Family::path, .n = 4})) == 3);   // tree: m
  CHECK(rc_lower_bound(generate({.family = Family::cycle, .n = 6})) == 3);  // diameter
  const Graph k4 = Graph::from_edges(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2),
                                         Edge(1, 3), Edge(2, 3)});
  CHECK(rc_lower_bound(k4) == 1);
}

TEST_CASE("exact_rc spot values") {
  const Graph k4 = Graph::from_edges(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(1, 2),
                                         Edge(1, 3), Edge(2, 3)});
  CHECK(exact_rc(k4) == 1);
  CHECK(exact_rc(generate({.family = Family::cycle, .n = 5})) == 3);
  CHECK(exact_rc(generate({.family = Family::path, .n = 4})) == 3);
}

TEST_CASE("exact_rc of complete graphs is 1") {
  for (int n = 3; n <= 5; ++n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    OracleLimits limits;
    limits.max_edges = 10;
    CHECK(exact_rc(Graph::from_edges(n, edges), limits) == 1);
  }
}

TEST_CASE("exact_rc of cycles matches ceil(n/2) for n in 4..6") {
  CHECK(exact_rc(generate({.family = Family::cycle, .n = 4})) == 2);
  CHECK(exact_rc(generate({.family = Family::cycle, .n = 5})) == 3);
  CHECK(exact_rc(generate({.family = Family::cycle, .n = 6})) == 3);
}

TEST_CASE("exact_rc of small trees equals the edge count") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph tree = generate({.family = Family::random_tree, .n = 7, .seed = seed});
    CHECK(exact_rc(tree) == tree.edge_count());
  }
  CHECK(exact_rc(generate({.family = Family::star, .n = 8})) == 8);
}

TEST_CASE("exact_rc agrees with a fully independent brute force") {
  const std::vector<Graph> tiny = {
      generate({.family = Family::cycle, .n = 4}),
      generate({.family = Family::cycle, .n = 5}),
      generate({.family = Family::path, .n = 4}),
      generate({.family = Family::theta, .arms = {1, 2, 2}}),
      generate({.family = Family::cycle_with_pendants, .n = 4, .attach = {0}}),
  };
  for (const Graph& g : tiny) CHECK(exact_rc(g) == brute::exact_rc_by_enumeration(g));
}

TEST_CASE("oracle sandwich on small corpus graphs") {
  for (const CorpusEntry& entry : build_corpus()) {
    if (entry.graph.edge_count() > 9 || entry.graph.vertex_count() < 2) continue;
    CAPTURE(entry.name);
    const int lower = rc_lower_bound(entry.graph);
    const int exact = exact_rc(entry.graph);
    const RcResult result = build(entry.graph);
    CHECK(lower <= exact);
    CHECK(exact <= result.colors_used);
    CHECK(result.colors_used <= result.bound);
  }
}

TEST_CASE("oracle refuses over-budget input instead of approximating") {
  const Graph big = generate({.family = Family::cycle, .n = 20});
  CHECK_THROWS_AS(exact_rc(big), CapacityError);

  OracleLimits no_time;
  no_time.time_budget_seconds = 0.0;
  CHECK_THROWS_AS(exact_rc(generate({.family = Family::cycle, .n = 9}), no_time), CapacityError);

  OracleLimits tight_palette;
  tight_palette.max_colors = 2;
  CHECK_THROWS_AS(exact_rc(generate({.family = Family::path, .n = 5}), tight_palette),
                  CapacityError);
}
