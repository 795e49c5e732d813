#include <doctest.h>

#include "corpus.hpp"
#include "rainbow/generators.hpp"
#include "test_oracles.hpp"

using namespace rainbow;

TEST_CASE("named families have canonical shapes") {
  const Graph c6 = generate({.family = Family::cycle, .n = 6});
  CHECK(c6.vertex_count() == 6);
  CHECK(c6.edge_count() == 6);

  const Graph star = generate({.family = Family::star, .n = 5});
  CHECK(star.vertex_count() == 6);
  CHECK(star.degree(0) == 5);  // hub is vertex 0

  const Graph theta = generate({.family = Family::theta, .arms = {2, 3, 4}});
  CHECK(theta.degree(0) == 3);
  CHECK(theta.degree(1) == 3);
  CHECK(theta.edge_count() == 9);

  const Graph barbell = generate({.family = Family::barbell_bridge, .a = 4, .b = 5});
  CHECK(barbell.vertex_count() == 9);
  CHECK(barbell.edge_count() == 6 + 10 + 1);
  CHECK(find_bridges(barbell) == std::vector<Edge>{Edge(3, 4)});
}

TEST_CASE("cycle_with_pendants has exactly |attach| bridges") {
  const Graph g = generate({.family = Family::cycle_with_pendants, .n = 6, .attach = {0, 3}});
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 8);
  const auto bridges = find_bridges(g);
  CHECK(bridges.size() == 2);
  CHECK(bridges == brute::bridges_by_removal(g));

  const Graph doubled =
      generate({.family = Family::cycle_with_pendants, .n = 6, .attach = {0, 0, 3}});
  CHECK(find_bridges(doubled).size() == 3);
}

TEST_CASE("generate is a pure function of its spec") {
  const FamilySpec spec{.family = Family::random_connected, .n = 20, .p = 0.2, .seed = 7};
  const Graph a = generate(spec);
  const Graph b = generate(spec);
  CHECK(a.edges() == b.edges());

  const FamilySpec other{.family = Family::random_connected, .n = 20, .p = 0.2, .seed = 8};
  CHECK(generate(other).edges() != a.edges());

  const FamilySpec tree{.family = Family::random_tree, .n = 16, .seed = 3};
  CHECK(generate(tree).edges() == generate(tree).edges());
}

TEST_CASE("random trees are trees") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph tree = generate({.family = Family::random_tree, .n = 12, .seed = seed});
    CHECK(tree.edge_count() == 11);
    CHECK(is_connected(tree));
  }
}

TEST_CASE("every corpus graph is connected") {
  const auto corpus = build_corpus();
  CHECK(corpus.size() >= 200);
  for (const CorpusEntry& entry : corpus) {
    CAPTURE(entry.name);
    CHECK(is_connected(entry.graph));
  }
}

TEST_CASE("invalid family parameters are rejected") {
  CHECK_THROWS_AS(generate({.family = Family::cycle, .n = 2}), std::invalid_argument);
  CHECK_THROWS_AS(generate({.family = Family::path, .n = 1}), std::invalid_argument);
  CHECK_THROWS_AS(generate({.family = Family::star, .n = 0}), std::invalid_argument);
  CHECK_THROWS_AS(generate({.family = Family::theta, .arms = {3}}), std::invalid_argument);
  CHECK_THROWS_AS(generate({.family = Family::theta, .arms = {1, 1, 2}}),
                  std::invalid_argument);  // two unit arms would be parallel
  CHECK_THROWS_AS(generate({.family = Family::theta, .arms = {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(generate({.family = Family::random_connected, .n = 10, .p = 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate({.family = Family::cycle_with_pendants, .n = 5, .attach = {9}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate({.family = Family::barbell_bridge, .a = 0, .b = 3}),
                  std::invalid_argument);
}
