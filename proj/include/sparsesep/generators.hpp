#pragma once

#include <cstdint>
#include <string>

#include "sparsesep/graph.hpp"

namespace sparsesep {

enum class GraphFamily { path, cycle, clique, star, grid, petersen, gnp, grid_subgraph };

// Parsed form of a family spec string such as "path:8", "grid:2:3",
// "gnp:10:0.5:7" or "grid_subgraph:2:4:0.8:7". Randomized families carry an
// explicit 64-bit seed and regenerate bit-for-bit.
struct FamilySpec {
  GraphFamily family = GraphFamily::path;
  std::string text;  // the original spec string, used for labels
  int n = 0;         // path/cycle/clique vertex count, star leaf count, gnp n
  int dim = 0;       // grid families
  int side = 0;      // grid families
  double p = 0.0;    // gnp edge probability / grid_subgraph keep probability
  std::uint64_t seed = 0;
};

FamilySpec parse_family_spec(const std::string& text);
Graph generate(const FamilySpec& spec);

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_clique(int n);
Graph make_star(int leaves);
Graph make_grid(int dim, int side);
Graph make_petersen();
Graph make_gnp(int n, double p, std::uint64_t seed);
Graph make_grid_subgraph(int dim, int side, double keep_prob, std::uint64_t seed);

}  // namespace sparsesep
