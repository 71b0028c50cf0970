#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sparsesep/graph.hpp"
#include "sparsesep/minor.hpp"
#include "sparsesep/rational.hpp"

namespace sparsesep {

// A linear order on the vertices: position maps each vertex to its rank, a
// bijection onto 0..n-1.
struct LinearOrder {
  std::vector<int> position;
};

LinearOrder order_from_sequence(const std::vector<Vertex>& ranked);
std::vector<Vertex> order_sequence(const LinearOrder& L);
void require_order(const Graph& g, const LinearOrder& L);

enum class ReachKind { strong, weak };

/// Max over vertices u of the number of vertices reachable from u (u itself
/// included, via the length-0 path). Strong: v is ordered no later than u and
/// some path of length <= r from u reaches it with all internal vertices
/// later than u. Weak: v is the minimum of some such path.
int coloring_number(const Graph& g, const LinearOrder& L, int r, ReachKind kind);

/// Min-degree peeling order; under it the strong 1-coloring value equals
/// degeneracy + 1.
LinearOrder degeneracy_order(const Graph& g);

inline constexpr int kBestOrderExactCapDefault = 9;

struct BestOrderResult {
  LinearOrder order;
  int value = 0;
};

/// Order minimizing the coloring value. Exact mode tries all n! orders (and
/// returns the lexicographically smallest optimum); heuristic mode returns the
/// better of the degeneracy order and a greedy insertion order.
BestOrderResult best_order(const Graph& g, int r, ReachKind kind, SearchMode mode,
                           int exact_cap = kBestOrderExactCapDefault);

struct TransferResult {
  LinearOrder minor_order;      // order on the minor vertices
  std::vector<int> backcounts;  // minor neighbors ordered strictly earlier
};

/// Orders minor vertices by the order-minimum of their branch sets (ties are
/// impossible since branch sets are disjoint) and counts earlier minor
/// neighbors per vertex.
TransferResult transfer_order(const Graph& g, const MinorModel& m, const LinearOrder& L);

struct OrderTransferReport {
  int radius_used = 0;        // 4r, clamped up to 1 when r = 0
  int coloring_value = 0;     // strong coloring value of (g, L) at that radius
  int max_backcount = 0;
  Rational minor_average_degree;
  bool per_vertex_ok = false;      // max_backcount + 1 <= coloring_value
  bool average_degree_ok = false;  // d(minor) <= 2 * coloring_value
  bool passed() const { return per_vertex_ok && average_degree_ok; }
};

/// Checks that the transferred order keeps every minor vertex's back-degree
/// below the host's strong coloring value at radius 4r, and that the minor's
/// average degree is at most twice that value. A depth-0 minor is a subgraph,
/// so radius 1 is used there instead of 0.
OrderTransferReport check_order_transfer(const Graph& g, const MinorModel& m,
                                         const LinearOrder& L);

std::string write_order(const LinearOrder& L);
LinearOrder read_order(std::istream& in);

}  // namespace sparsesep
