#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

enum class Family {
  cycle,
  path,
  star,
  theta,
  random_connected,
  random_tree,
  barbell_bridge,
  cycle_with_pendants,
};

/// Parameters for one deterministic test-corpus graph.
struct FamilySpec {
  Family family = Family::cycle;
  int n = 0;                  // cycle/path length, star leaf count, random sizes
  double p = 0.0;             // random_connected edge probability
  std::vector<int> arms;      // theta arm lengths (edge counts)
  std::vector<int> attach;    // cycle positions that receive a pendant vertex
  int a = 0, b = 0;           // barbell clique sizes
  std::uint64_t seed = 0;
};

const char* family_name(Family family);

/// The named graph with canonical vertex numbering; pure function of spec.
Graph generate(const FamilySpec& spec);

}  // namespace rainbow
