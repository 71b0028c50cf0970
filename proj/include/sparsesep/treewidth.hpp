#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "sparsesep/graph.hpp"
#include "sparsesep/rational.hpp"
#include "sparsesep/separator.hpp"

namespace sparsesep {

// Tree of bags witnessing a treewidth upper bound. parent[i] == -1 marks the
// root; width is the largest bag size minus one.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<int> parent;

  int width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
  }
};

struct DecompositionVerdict {
  bool valid = false;
  int width = -1;
  std::string reason;
};

DecompositionVerdict validate_decomposition(const Graph& g, const TreeDecomposition& td);

inline constexpr int kTreewidthDpMaxN = 18;
inline constexpr int kTreewidthCapDefault = 24;

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
};

/// Exact treewidth with a witnessing decomposition. Subset DP up to n = 18,
/// branch-and-bound beyond, refusal past the cap.
TreewidthResult treewidth_exact(const Graph& g, int cap = kTreewidthCapDefault);

// The two exact engines, exposed separately so they can cross-check each other.
TreewidthResult treewidth_subset_dp(const Graph& g);
TreewidthResult treewidth_branch_and_bound(const Graph& g);

/// Balanced separator of order at most width+1 read off a valid decomposition:
/// some bag splits the rest into pieces that pack within the balance bound.
Separator separator_from_decomposition(const Graph& g, const TreeDecomposition& td);

using SeparatorProvider = std::function<Separator(const Graph&)>;

struct RecursionTraceEntry {
  int depth;
  int subproblem_size;
  int separator_order;
};

struct SeparatorDecompositionResult {
  TreeDecomposition decomposition;
  std::vector<RecursionTraceEntry> trace;
  int max_separator_order = 0;
};

/// Builds a decomposition recursively: split on S = A∩B, recurse on the two
/// difference sides with S attached to every bag below. The trace records
/// every separator order used, so the logarithmic width bound can be checked
/// against what actually happened. Separators the provider returns are
/// validated; invalid ones raise CertificationError.
SeparatorDecompositionResult decomposition_from_separators(const Graph& g,
                                                           const SeparatorProvider& provider);

inline constexpr int kSeparatorTreewidthFactor = 105;

struct SeparatorTreewidthReport {
  int k = 0;
  int treewidth = 0;
  Rational ratio;  // treewidth / k
  bool holds = false;
};

/// Computes k = subgraph_separator_bound and checks tw <= 105 k.
SeparatorTreewidthReport check_separator_treewidth_bound(
    const Graph& g, int subgraph_limit = kSubgraphBoundLimitDefault,
    int tw_cap = kTreewidthCapDefault);

inline constexpr int kDegree3MaxN = 10;
inline constexpr int kDegree3MaxEdges = 22;

struct Degree3Witness {
  Graph subgraph;  // same vertex set as the host, max degree <= 3
  int treewidth = 0;
};

/// Maximum-treewidth subgraph of maximum degree at most 3, by exhaustive
/// search over degree-capped edge subsets with dominance pruning.
Degree3Witness max_treewidth_degree3_subgraph(const Graph& g, int max_n = kDegree3MaxN,
                                              int max_m = kDegree3MaxEdges);

// PACE-style serialization: "s <num_bags> <width+1> <n>", then "b <id> v...",
// then tree edge lines; bag ids and vertices are 1-based in the file.
std::string write_tree_decomposition(const TreeDecomposition& td, int n);
TreeDecomposition read_tree_decomposition(std::istream& in);

}  // namespace sparsesep
