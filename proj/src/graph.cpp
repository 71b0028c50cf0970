#include "sparsesep/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include "sparsesep/errors.hpp"

namespace sparsesep {

Edge normalized_edge(Vertex u, Vertex v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 0) throw DomainError("vertex count must be nonnegative");
  edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw DomainError("edge endpoint out of range: " + std::to_string(u) + " " +
                        std::to_string(v));
    edges_.push_back(normalized_edge(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adj_.assign(n, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
  if (n <= 64) {
    masks_.assign(n, 0);
    for (const auto& [u, v] : edges_) {
      masks_[u] |= std::uint64_t{1} << v;
      masks_[v] |= std::uint64_t{1} << u;
    }
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const {
  if (masks_.empty()) throw InternalError("bitmask adjacency requires n <= 64");
  return masks_[v];
}

VertexSet sorted_unique(VertexSet v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void require_vertex_set(const Graph& g, const VertexSet& s, const char* what) {
  Vertex prev = -1;
  for (Vertex v : s) {
    if (v < 0 || v >= g.vertex_count())
      throw DomainError(std::string(what) + ": vertex " + std::to_string(v) +
                        " out of range");
    if (v <= prev) throw DomainError(std::string(what) + ": not sorted-unique");
    prev = v;
  }
}

std::uint64_t mask_of(const VertexSet& s) {
  std::uint64_t m = 0;
  for (Vertex v : s) m |= std::uint64_t{1} << v;
  return m;
}

VertexSet set_from_mask(std::uint64_t mask) {
  VertexSet s;
  for (std::uint64_t bits = mask; bits; bits &= bits - 1)
    s.push_back(std::countr_zero(bits));
  return s;
}

Rational average_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw DomainError("average degree of the empty graph");
  return Rational(2LL * g.edge_count(), g.vertex_count());
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  require_vertex_set(g, s, "neighborhood");
  std::vector<char> in_s(g.vertex_count(), 0), out(g.vertex_count(), 0);
  for (Vertex v : s) in_s[v] = 1;
  VertexSet result;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (!in_s[w] && !out[w]) {
        out[w] = 1;
        result.push_back(w);
      }
  std::sort(result.begin(), result.end());
  return result;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  require_vertex_set(g, vertices, "induced_subgraph");
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) local[vertices[i]] = i;
  std::vector<Edge> edges;
  for (Vertex v : vertices)
    for (Vertex w : g.neighbors(v))
      if (w > v && local[w] >= 0) edges.emplace_back(local[v], local[w]);
  return {Graph(static_cast<int>(vertices.size()), edges), vertices};
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

CenterRadius eccentricity_radius(const Graph& g, const VertexSet& within) {
  require_vertex_set(g, within, "eccentricity_radius");
  if (within.empty()) throw DomainError("eccentricity_radius: empty vertex set");
  InducedSubgraph sub = induced_subgraph(g, within);
  const int k = sub.graph.vertex_count();
  CenterRadius best{-1, -1};
  for (int src = 0; src < k; ++src) {
    std::vector<int> dist = bfs_distances(sub.graph, src);
    int ecc = 0;
    for (int d : dist) {
      if (d < 0) throw DomainError("eccentricity_radius: induced subgraph is disconnected");
      ecc = std::max(ecc, d);
    }
    if (best.radius < 0 || ecc < best.radius) best = {sub.to_parent[src], ecc};
  }
  return best;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexSet> comps;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::queue<Vertex> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

int degeneracy(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int result = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    result = std::max(result, deg[best]);
    removed[best] = 1;
    for (Vertex w : g.neighbors(best))
      if (!removed[w]) --deg[w];
  }
  return result;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int offset = a.vertex_count();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph(a.vertex_count() + b.vertex_count(), edges);
}

}  // namespace sparsesep
