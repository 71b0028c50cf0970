#pragma once

#include <cstdint>

#include "sparsesep/graph.hpp"
#include "sparsesep/rational.hpp"
#include "sparsesep/separator.hpp"  // SearchMode

namespace sparsesep {

/// Vertex-expansion threshold tau(n) = 1 / (2^8 * log2(n) * (log2 log2 n)^2),
/// with n clamped up to 4 so both logs stay positive. All logs base 2.
double expansion_threshold(int n);

// An induced subgraph along with its density guarantee and the expansion it
// was checked against. When `exact` is set, every S with 2|S| <= |V(H)| was
// enumerated; otherwise only sampled sets were inspected and the certificate
// is advisory.
struct ExpansionCertificate {
  VertexSet vertices;       // host vertex ids of H
  Rational density;         // d(H)
  Rational density_bound;   // (255/256) * d(G)
  double tau = 0.0;         // threshold for |N(S)| >= tau * |S|
  bool exact = false;
  bool has_worst_set = false;
  VertexSet worst_set;      // host ids; empty when no admissible S exists
  Rational worst_ratio;     // min |N(S)| / |S| over admissible S
};

inline constexpr int kExpanderExactCapDefault = 14;

/// Finds an induced subgraph H with d(H) >= (255/256) d(G) whose vertex
/// expansion clears tau(|V(H)|). Exact mode enumerates candidates by
/// decreasing vertex count, then decreasing density, then lexicographic
/// order, certifying each by full enumeration; exhausting all candidates
/// raises InternalError. Heuristic mode keeps the densest component, deleting
/// sampled violating sets, and returns an uncertified result.
ExpansionCertificate expander_subgraph(const Graph& g, SearchMode mode,
                                       int exact_cap = kExpanderExactCapDefault,
                                       std::uint64_t heuristic_seed = 0);

inline constexpr int kVertexExpansionCapDefault = 22;

struct VertexExpansion {
  Rational min_ratio;
  VertexSet witness;
};

/// Exact min over nonempty S with 2|S| <= n of |N(S)|/|S|, with a witness.
VertexExpansion vertex_expansion_exact(const Graph& g,
                                       int cap = kVertexExpansionCapDefault);

}  // namespace sparsesep
