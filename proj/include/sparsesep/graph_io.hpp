#pragma once

#include <iosfwd>
#include <string>

#include "sparsesep/graph.hpp"

namespace sparsesep {

// Edge-list text format: first line "n m", then m lines "u v" with 0-based
// ids and u < v. Blank lines and '#' comments are ignored.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

// DIMACS-like alternate input: "p edge n m" header and "e u v" lines, 1-based.
Graph read_dimacs(std::istream& in);

// Sniffs the format from the first meaningful line ('p'/'c' means DIMACS).
Graph read_graph_auto(std::istream& in);
Graph load_graph_file(const std::string& path);

}  // namespace sparsesep
