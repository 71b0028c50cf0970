#include "sparsesep/minor.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "sparsesep/errors.hpp"

namespace sparsesep {

namespace {

// BFS distances from src inside the subgraph induced by `members` (which must
// contain src). Unreachable members keep -1.
std::vector<int> distances_within(const Graph& g, const VertexSet& members, Vertex src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<char> in(g.vertex_count(), 0);
  for (Vertex v : members) in[v] = 1;
  std::queue<Vertex> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : g.neighbors(v))
      if (in[w] && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

}  // namespace

ModelVerdict validate_model(const Graph& g, const MinorModel& m) {
  if (m.depth < 0) return {false, "negative depth"};
  const int k = static_cast<int>(m.branch_sets.size());
  if (static_cast<int>(m.centers.size()) != k)
    return {false, "centers count differs from branch set count"};
  if (m.edge_witnesses.size() != m.minor_edges.size())
    return {false, "witness count differs from minor edge count"};
  std::vector<int> owner(g.vertex_count(), -1);
  for (int b = 0; b < k; ++b) {
    const VertexSet& bs = m.branch_sets[b];
    if (bs.empty()) return {false, "branch set " + std::to_string(b) + " is empty"};
    Vertex prev = -1;
    for (Vertex v : bs) {
      if (v < 0 || v >= g.vertex_count())
        return {false, "branch set " + std::to_string(b) + " holds out-of-range vertex"};
      if (v <= prev) return {false, "branch set " + std::to_string(b) + " not sorted-unique"};
      prev = v;
      if (owner[v] != -1)
        return {false, "branch sets " + std::to_string(owner[v]) + " and " +
                           std::to_string(b) + " overlap at vertex " + std::to_string(v)};
      owner[v] = b;
    }
    const Vertex c = m.centers[b];
    if (!std::binary_search(bs.begin(), bs.end(), c))
      return {false, "center of branch set " + std::to_string(b) + " lies outside it"};
    std::vector<int> dist = distances_within(g, bs, c);
    for (Vertex v : bs) {
      if (dist[v] < 0)
        return {false, "branch set " + std::to_string(b) + " induces a disconnected subgraph"};
      if (dist[v] > m.depth)
        return {false, "branch set " + std::to_string(b) + " exceeds radius " +
                           std::to_string(m.depth) + " at vertex " + std::to_string(v)};
    }
  }
  std::vector<Edge> seen_edges;
  for (size_t i = 0; i < m.minor_edges.size(); ++i) {
    const auto& [a, b] = m.minor_edges[i];
    if (a < 0 || b < 0 || a >= k || b >= k)
      return {false, "minor edge endpoint out of range"};
    if (a == b) return {false, "minor self-loop"};
    if (a > b) return {false, "minor edge not normalized"};
    seen_edges.push_back(m.minor_edges[i]);
    const auto& [x, y] = m.edge_witnesses[i];
    if (!g.has_edge(x, y))
      return {false, "witness " + std::to_string(x) + "-" + std::to_string(y) +
                         " is not a host edge"};
    const bool forward = std::binary_search(m.branch_sets[a].begin(), m.branch_sets[a].end(), x) &&
                         std::binary_search(m.branch_sets[b].begin(), m.branch_sets[b].end(), y);
    const bool backward = std::binary_search(m.branch_sets[a].begin(), m.branch_sets[a].end(), y) &&
                          std::binary_search(m.branch_sets[b].begin(), m.branch_sets[b].end(), x);
    if (!forward && !backward)
      return {false, "witness for minor edge " + std::to_string(a) + "-" + std::to_string(b) +
                         " does not join its branch sets"};
  }
  std::sort(seen_edges.begin(), seen_edges.end());
  if (std::adjacent_find(seen_edges.begin(), seen_edges.end()) != seen_edges.end())
    return {false, "duplicate minor edge"};
  return {true, ""};
}

Graph contract(const Graph& g, const MinorModel& m) {
  const ModelVerdict verdict = validate_model(g, m);
  if (!verdict.valid) throw DomainError("contract: invalid minor model: " + verdict.reason);
  return Graph(static_cast<int>(m.branch_sets.size()), m.minor_edges);
}

InducedSubgraph model_host_subgraph(const Graph& g, const MinorModel& m) {
  const ModelVerdict verdict = validate_model(g, m);
  if (!verdict.valid)
    throw DomainError("model_host_subgraph: invalid minor model: " + verdict.reason);
  VertexSet all;
  for (const auto& bs : m.branch_sets) all.insert(all.end(), bs.begin(), bs.end());
  return induced_subgraph(g, sorted_unique(std::move(all)));
}

MinorModel identity_model(const Graph& g) {
  MinorModel m;
  m.depth = 0;
  m.branch_sets.resize(g.vertex_count());
  m.centers.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    m.branch_sets[v] = {v};
    m.centers[v] = v;
  }
  m.minor_edges = g.edges();
  m.edge_witnesses = g.edges();
  return m;
}

namespace {

// Completes a branch-set family into a model: all realizable minor edges with
// the lowest witness per pair, centers minimizing eccentricity.
MinorModel finish_model(const Graph& g, int depth, std::vector<VertexSet> blocks) {
  MinorModel m;
  m.depth = depth;
  m.branch_sets = std::move(blocks);
  const int k = static_cast<int>(m.branch_sets.size());
  m.centers.resize(k);
  for (int b = 0; b < k; ++b) m.centers[b] = eccentricity_radius(g, m.branch_sets[b]).center;
  std::vector<int> owner(g.vertex_count(), -1);
  for (int b = 0; b < k; ++b)
    for (Vertex v : m.branch_sets[b]) owner[v] = b;
  std::map<Edge, Edge> witness;  // minor edge -> first host edge
  for (const auto& [u, v] : g.edges()) {
    const int bu = owner[u], bv = owner[v];
    if (bu < 0 || bv < 0 || bu == bv) continue;
    witness.emplace(normalized_edge(bu, bv), Edge{u, v});
  }
  for (const auto& [me, we] : witness) {
    m.minor_edges.push_back(me);
    m.edge_witnesses.push_back(we);
  }
  return m;
}

long long count_realizable_edges(const Graph& g, const std::vector<int>& owner) {
  std::vector<Edge> pairs;
  for (const auto& [u, v] : g.edges()) {
    const int bu = owner[u], bv = owner[v];
    if (bu < 0 || bv < 0 || bu == bv) continue;
    pairs.push_back(normalized_edge(bu, bv));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return static_cast<long long>(pairs.size());
}

bool block_feasible(const Graph& g, const VertexSet& block, int r) {
  std::vector<int> dist = distances_within(g, block, block.front());
  for (Vertex v : block)
    if (dist[v] < 0) return false;  // disconnected
  // Radius = min eccentricity over members.
  for (Vertex c : block) {
    std::vector<int> d = distances_within(g, block, c);
    int ecc = 0;
    for (Vertex v : block) ecc = std::max(ecc, d[v]);
    if (ecc <= r) return true;
  }
  return false;
}

class ExactDensestSearch {
public:
  ExactDensestSearch(const Graph& g, int r) : g_(g), n_(g.vertex_count()), r_(r) {}

  DensestMinor run() {
    assignment_.assign(n_, -1);
    recurse(0, 0);
    if (best_blocks_.empty()) throw InternalError("densest minor search found no family");
    return {finish_model(g_, r_, best_blocks_), best_density_};
  }

private:
  // Canonical family enumeration: vertex i joins an existing block, opens
  // block #count, or stays unused.
  void recurse(int idx, int blocks) {
    if (idx == n_) {
      evaluate(blocks);
      return;
    }
    for (int b = 0; b <= blocks && b < n_; ++b) {
      assignment_[idx] = b;
      recurse(idx + 1, std::max(blocks, b + 1));
    }
    assignment_[idx] = -1;
    recurse(idx + 1, blocks);
  }

  void evaluate(int blocks) {
    if (blocks == 0) return;
    std::vector<VertexSet> family(blocks);
    for (int v = 0; v < n_; ++v)
      if (assignment_[v] >= 0) family[assignment_[v]].push_back(v);
    for (const auto& block : family)
      if (!block_feasible(g_, block, r_)) return;
    const long long e = count_realizable_edges(g_, assignment_);
    const Rational density(2 * e, blocks);
    if (best_blocks_.empty() || density > best_density_) {
      best_density_ = density;
      best_blocks_ = family;
    }
  }

  const Graph& g_;
  int n_;
  int r_;
  std::vector<int> assignment_;
  Rational best_density_{0};
  std::vector<VertexSet> best_blocks_;
};

VertexSet ball_within_unused(const Graph& g, const std::vector<char>& used, Vertex center,
                             int radius) {
  VertexSet ball{center};
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  dist[center] = 0;
  q.push(center);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    if (dist[v] == radius) continue;
    for (Vertex w : g.neighbors(v))
      if (!used[w] && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
        ball.push_back(w);
      }
  }
  std::sort(ball.begin(), ball.end());
  return ball;
}

class GreedyDensestSearch {
public:
  GreedyDensestSearch(const Graph& g, int r) : g_(g), n_(g.vertex_count()), r_(r) {}

  DensestMinor run() {
    std::vector<char> used(n_, 0);
    std::vector<int> owner(n_, -1);
    std::vector<VertexSet> blocks;
    long long minor_edges = 0;

    auto gained_edges = [&](const VertexSet& ball) {
      std::vector<char> seen(blocks.size(), 0);
      long long gain = 0;
      for (Vertex v : ball)
        for (Vertex w : g_.neighbors(v)) {
          const int b = owner[w];
          if (b >= 0 && !seen[b]) {
            seen[b] = 1;
            ++gain;
          }
        }
      return gain;
    };

    int used_count = 0;
    while (used_count < n_) {
      VertexSet best_ball;
      Rational best_density(-1);
      for (Vertex v = 0; v < n_; ++v) {
        if (used[v]) continue;
        for (int rho = 0; rho <= r_; ++rho) {
          VertexSet ball = ball_within_unused(g_, used, v, rho);
          const Rational density(2 * (minor_edges + gained_edges(ball)),
                                 static_cast<long long>(blocks.size()) + 1);
          if (density > best_density) {
            best_density = density;
            best_ball = std::move(ball);
          }
        }
      }
      minor_edges += gained_edges(best_ball);
      for (Vertex v : best_ball) {
        used[v] = 1;
        owner[v] = static_cast<int>(blocks.size());
      }
      used_count += static_cast<int>(best_ball.size());
      blocks.push_back(std::move(best_ball));
      if (best_snapshot_.empty() || best_density > best_density_) {
        best_density_ = best_density;
        best_snapshot_ = blocks;
      }
    }

    peel(blocks);
    return {finish_model(g_, r_, best_snapshot_), best_density_};
  }

private:
  // Peel minimum-degree blocks off the contracted graph, keeping the densest
  // prefix seen.
  void peel(const std::vector<VertexSet>& blocks) {
    const int k = static_cast<int>(blocks.size());
    std::vector<int> owner(n_, -1);
    for (int b = 0; b < k; ++b)
      for (Vertex v : blocks[b]) owner[v] = b;
    std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
    for (const auto& [u, v] : g_.edges()) {
      const int bu = owner[u], bv = owner[v];
      if (bu < 0 || bv < 0 || bu == bv) continue;
      adj[bu][bv] = adj[bv][bu] = 1;
    }
    std::vector<char> alive(k, 1);
    std::vector<int> deg(k, 0);
    long long edges = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (adj[a][b]) {
          ++deg[a];
          ++deg[b];
          ++edges;
        }
    int alive_count = k;
    while (alive_count > 0) {
      const Rational density(2 * edges, alive_count);
      if (density > best_density_) {
        best_density_ = density;
        best_snapshot_.clear();
        for (int b = 0; b < k; ++b)
          if (alive[b]) best_snapshot_.push_back(blocks[b]);
      }
      int victim = -1;
      for (int b = 0; b < k; ++b)
        if (alive[b] && (victim < 0 || deg[b] < deg[victim])) victim = b;
      alive[victim] = 0;
      --alive_count;
      for (int b = 0; b < k; ++b)
        if (alive[b] && adj[victim][b]) {
          --deg[b];
          --edges;
        }
    }
  }

  const Graph& g_;
  int n_;
  int r_;
  Rational best_density_{-1};
  std::vector<VertexSet> best_snapshot_;
};

}  // namespace

DensestMinor densest_shallow_minor(const Graph& g, int r, SearchMode mode, int exact_cap) {
  if (g.vertex_count() == 0) throw DomainError("densest_shallow_minor: empty graph");
  if (r < 0) throw DomainError("densest_shallow_minor: negative radius");
  if (mode == SearchMode::exact) {
    if (g.vertex_count() > exact_cap || g.vertex_count() > 12)
      throw RefusalError("densest_shallow_minor: exact mode capped at n <= " +
                         std::to_string(std::min(exact_cap, 12)));
    return ExactDensestSearch(g, r).run();
  }
  return GreedyDensestSearch(g, r).run();
}

std::vector<ProfileEntry> expansion_profile(const Graph& g, int r_max, SearchMode mode,
                                            int exact_cap) {
  if (r_max < 0) throw DomainError("expansion_profile: negative r_max");
  std::vector<ProfileEntry> profile;
  Rational best(-1);
  for (int r = 0; r <= r_max; ++r) {
    const DensestMinor result = densest_shallow_minor(g, r, mode, exact_cap);
    best = std::max(best, result.density);
    profile.push_back({r, best});
  }
  return profile;
}

MinorModel random_ball_packing_model(const Graph& g, int r, SeededRng& rng) {
  if (g.vertex_count() == 0) throw DomainError("random_ball_packing_model: empty graph");
  if (r < 0) throw DomainError("random_ball_packing_model: negative radius");
  std::vector<char> used(g.vertex_count(), 0);
  std::vector<VertexSet> blocks;
  std::vector<Vertex> roots;
  VertexSet unused(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) unused[v] = v;
  while (!unused.empty()) {
    const Vertex center = unused[rng.uniform_int(0, static_cast<int>(unused.size()) - 1)];
    const int rho = rng.uniform_int(0, r);
    VertexSet ball = ball_within_unused(g, used, center, rho);
    for (Vertex v : ball) used[v] = 1;
    blocks.push_back(std::move(ball));
    roots.push_back(center);
    VertexSet rest;
    for (Vertex v : unused)
      if (!used[v]) rest.push_back(v);
    unused = std::move(rest);
  }
  MinorModel m = finish_model(g, r, std::move(blocks));
  m.centers = std::move(roots);  // the BFS roots already certify the radius
  return m;
}

std::string write_minor_model(const MinorModel& m) {
  std::ostringstream out;
  out << "r " << m.depth << '\n';
  for (size_t b = 0; b < m.branch_sets.size(); ++b) {
    out << "m " << b << " c " << m.centers[b] << " :";
    for (Vertex v : m.branch_sets[b]) out << ' ' << v;
    out << '\n';
  }
  for (size_t i = 0; i < m.minor_edges.size(); ++i)
    out << "e " << m.minor_edges[i].first << ' ' << m.minor_edges[i].second << " via "
        << m.edge_witnesses[i].first << ' ' << m.edge_witnesses[i].second << '\n';
  return out.str();
}

MinorModel read_minor_model(std::istream& in) {
  MinorModel m;
  bool saw_depth = false;
  std::string line;
  std::map<int, std::pair<Vertex, VertexSet>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    if (tag == "r") {
      if (!(row >> m.depth)) throw DomainError("minor model: malformed depth line");
      saw_depth = true;
    } else if (tag == "m") {
      int id;
      std::string c_tag, colon;
      Vertex center;
      if (!(row >> id >> c_tag >> center >> colon) || c_tag != "c" || colon != ":")
        throw DomainError("minor model: malformed branch set line '" + line + "'");
      VertexSet vs;
      Vertex v;
      while (row >> v) vs.push_back(v);
      rows[id] = {center, sorted_unique(std::move(vs))};
    } else if (tag == "e") {
      int a, b;
      std::string via;
      Vertex x, y;
      if (!(row >> a >> b >> via >> x >> y) || via != "via")
        throw DomainError("minor model: malformed edge line '" + line + "'");
      m.minor_edges.push_back(normalized_edge(a, b));
      m.edge_witnesses.push_back({x, y});
    } else {
      throw DomainError("minor model: unexpected line '" + line + "'");
    }
  }
  if (!saw_depth) throw DomainError("minor model: missing depth line");
  int expect = 0;
  for (const auto& [id, data] : rows) {
    if (id != expect++) throw DomainError("minor model: branch set ids must be 0..k-1");
    m.centers.push_back(data.first);
    m.branch_sets.push_back(data.second);
  }
  return m;
}

}  // namespace sparsesep
