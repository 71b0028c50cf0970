#include "sparsesep/orders.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <sstream>

#include "sparsesep/errors.hpp"

namespace sparsesep {

LinearOrder order_from_sequence(const std::vector<Vertex>& ranked) {
  LinearOrder L;
  L.position.assign(ranked.size(), -1);
  for (int rank = 0; rank < static_cast<int>(ranked.size()); ++rank) {
    const Vertex v = ranked[rank];
    if (v < 0 || v >= static_cast<int>(ranked.size()) || L.position[v] != -1)
      throw DomainError("order sequence is not a permutation");
    L.position[v] = rank;
  }
  return L;
}

std::vector<Vertex> order_sequence(const LinearOrder& L) {
  std::vector<Vertex> seq(L.position.size(), -1);
  for (int v = 0; v < static_cast<int>(L.position.size()); ++v) {
    const int rank = L.position[v];
    if (rank < 0 || rank >= static_cast<int>(seq.size()) || seq[rank] != -1)
      throw DomainError("order positions are not a permutation");
    seq[rank] = v;
  }
  return seq;
}

void require_order(const Graph& g, const LinearOrder& L) {
  if (static_cast<int>(L.position.size()) != g.vertex_count())
    throw DomainError("order size differs from vertex count");
  order_sequence(L);  // throws unless bijective
}

namespace {

// Strong reach from u: BFS expanding only through vertices ordered after u;
// every reached vertex ordered no later than u counts (u itself included).
int strong_reach_count(const Graph& g, const LinearOrder& L, int r, Vertex u) {
  const int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  std::queue<Vertex> q;
  dist[u] = 0;
  q.push(u);
  int count = 0;
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    if (dist[v] == r) continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[v] + 1;
      if (L.position[w] > L.position[u]) q.push(w);  // may serve as an interior
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (dist[v] >= 0 && dist[v] <= r && L.position[v] <= L.position[u]) ++count;
  return count;
}

}  // namespace

int coloring_number(const Graph& g, const LinearOrder& L, int r, ReachKind kind) {
  require_order(g, L);
  if (r < 0) throw DomainError("coloring_number: negative radius");
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (kind == ReachKind::strong) {
    int best = 0;
    for (Vertex u = 0; u < n; ++u) best = std::max(best, strong_reach_count(g, L, r, u));
    return best;
  }
  // Weak: count from the low endpoint side. BFS from v over vertices ordered
  // no earlier than v finds every u that reaches v along a path with minimum v.
  std::vector<int> counts(n, 1);  // each vertex weakly reaches itself
  for (Vertex v = 0; v < n; ++v) {
    std::vector<int> dist(n, -1);
    std::queue<Vertex> q;
    dist[v] = 0;
    q.push(v);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      if (dist[x] == r) continue;
      for (Vertex w : g.neighbors(x))
        if (dist[w] < 0 && L.position[w] > L.position[v]) {
          dist[w] = dist[x] + 1;
          q.push(w);
        }
    }
    for (Vertex u = 0; u < n; ++u)
      if (u != v && dist[u] >= 0 && dist[u] <= r) ++counts[u];
  }
  return *std::max_element(counts.begin(), counts.end());
}

LinearOrder degeneracy_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  LinearOrder L;
  L.position.assign(n, -1);
  // First-removed vertices take the last positions, so every vertex sees at
  // most its removal-time degree among earlier neighbors.
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    L.position[best] = n - 1 - step;
    removed[best] = 1;
    for (Vertex w : g.neighbors(best))
      if (!removed[w]) --deg[w];
  }
  return L;
}

namespace {

BestOrderResult best_order_exact(const Graph& g, int r, ReachKind kind) {
  const int n = g.vertex_count();
  std::vector<Vertex> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i;
  BestOrderResult best{order_from_sequence(seq), std::numeric_limits<int>::max()};
  do {
    const LinearOrder L = order_from_sequence(seq);
    const int value = coloring_number(g, L, r, kind);
    if (value < best.value) {
      best.value = value;
      best.order = L;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  return best;
}

BestOrderResult best_order_heuristic(const Graph& g, int r, ReachKind kind) {
  const LinearOrder degen = degeneracy_order(g);
  BestOrderResult best{degen, coloring_number(g, degen, r, kind)};

  // Greedy insertion: place vertices in degeneracy-sequence order, each at the
  // position minimizing the coloring value of the induced prefix.
  const std::vector<Vertex> arrival = order_sequence(degen);
  std::vector<Vertex> placed;
  for (Vertex v : arrival) {
    int best_pos = 0;
    int best_value = std::numeric_limits<int>::max();
    for (int pos = 0; pos <= static_cast<int>(placed.size()); ++pos) {
      std::vector<Vertex> trial = placed;
      trial.insert(trial.begin() + pos, v);
      const InducedSubgraph sub = induced_subgraph(g, sorted_unique(trial));
      std::vector<int> local_rank(sub.graph.vertex_count());
      for (int rank = 0; rank < static_cast<int>(trial.size()); ++rank) {
        const auto it = std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), trial[rank]);
        local_rank[rank] = static_cast<int>(it - sub.to_parent.begin());
      }
      std::vector<Vertex> local_seq(trial.size());
      for (int rank = 0; rank < static_cast<int>(trial.size()); ++rank)
        local_seq[rank] = local_rank[rank];
      const int value =
          coloring_number(sub.graph, order_from_sequence(local_seq), r, kind);
      if (value < best_value) {
        best_value = value;
        best_pos = pos;
      }
    }
    placed.insert(placed.begin() + best_pos, v);
  }
  const LinearOrder inserted = order_from_sequence(placed);
  const int inserted_value = coloring_number(g, inserted, r, kind);
  if (inserted_value < best.value) return {inserted, inserted_value};
  return best;
}

}  // namespace

BestOrderResult best_order(const Graph& g, int r, ReachKind kind, SearchMode mode,
                           int exact_cap) {
  if (g.vertex_count() == 0) throw DomainError("best_order: empty graph");
  if (r < 0) throw DomainError("best_order: negative radius");
  if (mode == SearchMode::exact) {
    if (g.vertex_count() > exact_cap || g.vertex_count() > 10)
      throw RefusalError("best_order: exact mode capped at n <= " +
                         std::to_string(std::min(exact_cap, 10)));
    return best_order_exact(g, r, kind);
  }
  return best_order_heuristic(g, r, kind);
}

TransferResult transfer_order(const Graph& g, const MinorModel& m, const LinearOrder& L) {
  const ModelVerdict verdict = validate_model(g, m);
  if (!verdict.valid) throw DomainError("transfer_order: invalid minor model: " + verdict.reason);
  require_order(g, L);
  const int k = static_cast<int>(m.branch_sets.size());
  std::vector<int> min_pos(k);
  for (int b = 0; b < k; ++b) {
    int best = std::numeric_limits<int>::max();
    for (Vertex v : m.branch_sets[b]) best = std::min(best, L.position[v]);
    min_pos[b] = best;
  }
  std::vector<int> by_min(k);
  for (int b = 0; b < k; ++b) by_min[b] = b;
  std::sort(by_min.begin(), by_min.end(),
            [&](int a, int b) { return min_pos[a] < min_pos[b]; });
  TransferResult result;
  result.minor_order.position.assign(k, -1);
  for (int rank = 0; rank < k; ++rank) result.minor_order.position[by_min[rank]] = rank;
  result.backcounts.assign(k, 0);
  for (const auto& [a, b] : m.minor_edges) {
    if (result.minor_order.position[a] < result.minor_order.position[b])
      ++result.backcounts[b];
    else
      ++result.backcounts[a];
  }
  return result;
}

OrderTransferReport check_order_transfer(const Graph& g, const MinorModel& m,
                                         const LinearOrder& L) {
  OrderTransferReport report;
  report.radius_used = std::max(4 * m.depth, 1);
  report.coloring_value = coloring_number(g, L, report.radius_used, ReachKind::strong);
  const TransferResult transfer = transfer_order(g, m, L);
  report.max_backcount = 0;
  for (int c : transfer.backcounts) report.max_backcount = std::max(report.max_backcount, c);
  const Graph minor = contract(g, m);
  report.minor_average_degree =
      minor.vertex_count() == 0 ? Rational(0) : average_degree(minor);
  report.per_vertex_ok = report.max_backcount + 1 <= report.coloring_value;
  report.average_degree_ok =
      report.minor_average_degree <= Rational(2 * report.coloring_value);
  return report;
}

std::string write_order(const LinearOrder& L) {
  std::ostringstream out;
  const std::vector<Vertex> seq = order_sequence(L);
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) out << ' ';
    out << seq[i];
  }
  out << '\n';
  return out.str();
}

LinearOrder read_order(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::vector<Vertex> seq;
    Vertex v;
    while (row >> v) seq.push_back(v);
    return order_from_sequence(seq);
  }
  throw DomainError("order file: no order line found");
}

}  // namespace sparsesep
