#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sparsesep/graph.hpp"
#include "sparsesep/rational.hpp"
#include "sparsesep/rng.hpp"
#include "sparsesep/separator.hpp"  // SearchMode

namespace sparsesep {

// Witness that a graph is a depth-r minor of the host: pairwise disjoint
// branch sets, each inducing a connected subgraph of radius at most `depth`
// from its center, plus a host edge witnessing every minor edge. Branch sets
// need not cover the host; uncontracted vertices are simply absent.
struct MinorModel {
  int depth = 0;
  std::vector<VertexSet> branch_sets;  // minor vertex -> host vertices
  std::vector<Vertex> centers;         // minor vertex -> host vertex
  std::vector<Edge> minor_edges;       // pairs of minor vertices, normalized
  std::vector<Edge> edge_witnesses;    // host edge per minor edge (parallel)
};

struct ModelVerdict {
  bool valid = false;
  std::string reason;
};

ModelVerdict validate_model(const Graph& g, const MinorModel& m);

/// The minor graph itself: one vertex per branch set, exactly the model's
/// minor edges. Invalid models are a domain error.
Graph contract(const Graph& g, const MinorModel& m);

/// Inverse view: the host subgraph induced by the union of all branch sets
/// (it contains every witness edge). Its vertex count is the sum of branch
/// set sizes.
InducedSubgraph model_host_subgraph(const Graph& g, const MinorModel& m);

/// Depth-0 model with singleton branch sets and all host edges.
MinorModel identity_model(const Graph& g);

inline constexpr int kDensestExactCapDefault = 9;

struct DensestMinor {
  MinorModel model;
  Rational density;  // average degree of the contracted minor
};

/// Best average degree over depth-r minors. A minor edge is included whenever
/// some host edge joins two branch sets, so the search ranges over branch-set
/// families only. Exact mode enumerates every family (small n); greedy mode
/// contracts density-maximizing BFS balls and then peels the contracted graph
/// for its densest part, with no optimality claim.
DensestMinor densest_shallow_minor(const Graph& g, int r, SearchMode mode,
                                   int exact_cap = kDensestExactCapDefault);

struct ProfileEntry {
  int radius;
  Rational density;
};

/// Best density found per radius 0..r_max. A depth-r witness stays valid at
/// depth r+1, so entries are monotone nondecreasing by construction.
std::vector<ProfileEntry> expansion_profile(const Graph& g, int r_max, SearchMode mode,
                                            int exact_cap = kDensestExactCapDefault);

/// Random model for stress tests: packs BFS balls of random radius <= r over
/// random centers until every vertex is used. Always valid.
MinorModel random_ball_packing_model(const Graph& g, int r, SeededRng& rng);

std::string write_minor_model(const MinorModel& m);
MinorModel read_minor_model(std::istream& in);

}  // namespace sparsesep
