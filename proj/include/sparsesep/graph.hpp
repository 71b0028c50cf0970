#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sparsesep/rational.hpp"

namespace sparsesep {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored normalized, first < second
using VertexSet = std::vector<Vertex>;   // sorted, no duplicates

// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction; all operations on it are pure functions, so values can be
// shared freely across threads.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  int max_degree() const;

  // Bitmask adjacency, available only while n <= 64; exact search kernels
  // rely on it and enforce their size caps before calling.
  std::uint64_t neighbor_mask(Vertex v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
  std::vector<std::uint64_t> masks_;
};

Edge normalized_edge(Vertex u, Vertex v);

/// Average degree 2|E|/|V| as an exact rational. Empty graphs are a domain error.
Rational average_degree(const Graph& g);

/// N(S): vertices outside S with at least one neighbor in S.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

struct CenterRadius {
  Vertex center;
  int radius;
};

/// Center and radius of the subgraph induced by `within`, which must be
/// connected. Ties on eccentricity go to the lowest vertex id.
CenterRadius eccentricity_radius(const Graph& g, const VertexSet& within);

// Subgraph that remembers how to map its local ids back to the parent graph,
// so certificates computed on it can be checked against the original.
struct InducedSubgraph {
  Graph graph;
  VertexSet to_parent;  // local id -> parent id (sorted ascending)
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// BFS distances from src; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex src);

/// Degeneracy: max over the min-degree peeling of the degree at removal time.
int degeneracy(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

VertexSet sorted_unique(VertexSet v);
void require_vertex_set(const Graph& g, const VertexSet& s, const char* what);

std::uint64_t mask_of(const VertexSet& s);
VertexSet set_from_mask(std::uint64_t mask);

}  // namespace sparsesep
