#pragma once

// The fixed test corpus shared by the unit property tests and the
// acceptance suite. Every entry is deterministic (fixed seeds).

#include <string>
#include <vector>

#include "rainbow/generators.hpp"

struct CorpusEntry {
  std::string name;
  rainbow::Graph graph;
};

inline std::vector<CorpusEntry> build_corpus() {
  using rainbow::Family;
  using rainbow::FamilySpec;
  std::vector<CorpusEntry> corpus;

  auto add = [&corpus](const std::string& name, const FamilySpec& spec) {
    corpus.push_back({name, rainbow::generate(spec)});
  };

  for (int n = 3; n <= 30; ++n) {
    FamilySpec spec;
    spec.family = Family::cycle;
    spec.n = n;
    add("cycle_" + std::to_string(n), spec);
  }
  for (int n = 2; n <= 30; ++n) {
    FamilySpec spec;
    spec.family = Family::path;
    spec.n = n;
    add("path_" + std::to_string(n), spec);
  }
  for (int n = 2; n <= 20; ++n) {  // n vertices => n-1 leaves
    FamilySpec spec;
    spec.family = Family::star;
    spec.n = n - 1;
    add("star_" + std::to_string(n), spec);
  }

  const std::vector<std::vector<int>> theta_arms = {
      {2, 3},    {2, 3, 4}, {3, 3, 3}, {1, 2, 2}, {2, 2, 2},
      {1, 3, 3}, {2, 4, 4}, {3, 4, 5}, {2, 2, 5}, {4, 4, 4},
      {1, 2, 4}, {2, 3, 6}, {5, 5, 5}, {2, 5, 5}, {3, 3, 4},
  };
  for (std::size_t i = 0; i < theta_arms.size(); ++i) {
    FamilySpec spec;
    spec.family = Family::theta;
    spec.arms = theta_arms[i];
    add("theta_" + std::to_string(i), spec);
  }

  const std::vector<std::pair<int, std::vector<int>>> pendant_specs = {
      {5, {1}},          {6, {0, 3}},       {7, {0, 1, 2}},     {8, {0, 2, 4, 6}},
      {9, {4}},          {10, {0, 5}},      {12, {3, 7, 11}},   {15, {0, 7}},
      {20, {0, 5, 10, 15}}, {30, {0, 10, 20}}, {6, {0, 0, 3}},
  };
  for (std::size_t i = 0; i < pendant_specs.size(); ++i) {
    FamilySpec spec;
    spec.family = Family::cycle_with_pendants;
    spec.n = pendant_specs[i].first;
    spec.attach = pendant_specs[i].second;
    add("pendants_" + std::to_string(i), spec);
  }

  const std::vector<std::pair<double, std::vector<int>>> random_specs = {
      {0.6, {8, 10, 12, 16, 20}},
      {0.3, {12, 16, 20, 24, 28}},
      {0.15, {24, 28, 32, 36, 40}},
  };
  for (const auto& [p, sizes] : random_specs) {
    for (int n : sizes) {
      for (std::uint64_t seed : {1, 2}) {
        FamilySpec spec;
        spec.family = Family::random_connected;
        spec.n = n;
        spec.p = p;
        spec.seed = seed;
        add("random_n" + std::to_string(n) + "_p" + std::to_string(static_cast<int>(p * 100)) +
                "_s" + std::to_string(seed),
            spec);
      }
    }
  }

  for (int n = 2; n <= 25; ++n) {
    for (std::uint64_t seed : {1, 2, 3}) {
      FamilySpec spec;
      spec.family = Family::random_tree;
      spec.n = n;
      spec.seed = seed;
      add("tree_n" + std::to_string(n) + "_s" + std::to_string(seed), spec);
    }
  }

  const std::vector<std::pair<int, int>> barbells = {
      {2, 2}, {3, 3}, {4, 4}, {5, 5}, {3, 5}, {4, 6}, {2, 5}, {6, 6}, {3, 4}, {5, 7},
  };
  for (const auto& [a, b] : barbells) {
    FamilySpec spec;
    spec.family = Family::barbell_bridge;
    spec.a = a;
    spec.b = b;
    add("barbell_" + std::to_string(a) + "_" + std::to_string(b), spec);
  }

  return corpus;
}
