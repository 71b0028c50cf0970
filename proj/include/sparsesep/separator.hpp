#pragma once

#include <iosfwd>
#include <string>

#include "sparsesep/graph.hpp"

namespace sparsesep {

// A separator is a pair (A, B) of vertex sets covering V with no edge between
// A\B and B\A. Its order is |A∩B|; it is balanced when both differences hold
// at most two thirds of the vertices (tested exactly as 3|side| <= 2n).
struct Separator {
  VertexSet a;
  VertexSet b;
};

int separator_order(const Separator& s);

enum class SeparatorStatus { valid_balanced, valid_unbalanced, invalid };

struct SeparatorVerdict {
  SeparatorStatus status = SeparatorStatus::invalid;
  int order = -1;
  std::string reason;  // first violated clause when invalid
};

SeparatorVerdict validate_separator(const Graph& g, const Separator& s);

enum class SearchMode { exact, heuristic };

inline constexpr int kSeparatorExactCapDefault = 18;

/// Minimum-order balanced separator. Exact mode branches over cut sets and
/// returns the lexicographically smallest minimum-order cut; heuristic mode
/// (BFS layering plus local refinement) is valid but makes no optimality
/// claim. Exact mode refuses graphs larger than the cap.
Separator min_balanced_separator(const Graph& g, SearchMode mode,
                                 int exact_cap = kSeparatorExactCapDefault);

inline constexpr int kSubgraphBoundLimitDefault = 12;

struct SubgraphSeparatorBound {
  int k = 0;                     // max over connected induced subgraphs
  InducedSubgraph witness;       // an extremal subgraph
  Separator witness_separator;   // its minimum balanced separator (local ids)
};

/// Max over connected induced subgraphs of the exact minimum balanced
/// separator order. Restricting to connected induced subgraphs is safe: edge
/// deletions only make separation easier, and whole components pack greedily
/// into sides.
SubgraphSeparatorBound subgraph_separator_bound(const Graph& g,
                                                int limit = kSubgraphBoundLimitDefault);

std::string write_separator(const Separator& s);
Separator read_separator(std::istream& in);

}  // namespace sparsesep
