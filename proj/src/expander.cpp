#include "sparsesep/expander.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "sparsesep/errors.hpp"
#include "sparsesep/numerics.hpp"
#include "sparsesep/rng.hpp"

namespace sparsesep {

double expansion_threshold(int n) {
  const double m = std::max(n, 4);
  const double log_n = std::log2(m);
  const double log_log_n = std::log2(log_n);
  return 1.0 / (256.0 * log_n * log_log_n * log_log_n);
}

namespace {

using u64 = std::uint64_t;

u64 all_bits(int n) { return n == 64 ? ~u64{0} : (u64{1} << n) - 1; }

struct ExpansionScan {
  bool ok = true;
  bool has_worst = false;
  Rational worst_ratio;
  u64 worst_set = 0;
};

// Enumerates every nonempty S within `mask` with 2|S| <= |mask| and tracks
// the worst |N(S)|/|S| inside the induced subgraph, stopping early only if
// asked to.
ExpansionScan scan_expansion(const Graph& g, u64 mask, double tau, bool stop_at_violation) {
  ExpansionScan scan;
  const int k = std::popcount(mask);
  for (u64 s = (mask - 1) & mask; s; s = (s - 1) & mask) {
    if (2 * std::popcount(s) > k) continue;
    u64 nb = 0;
    for (u64 bits = s; bits; bits &= bits - 1) nb |= g.neighbor_mask(std::countr_zero(bits));
    const int boundary = std::popcount(nb & mask & ~s);
    const int size = std::popcount(s);
    const Rational ratio(boundary, size);
    if (!scan.has_worst || ratio < scan.worst_ratio) {
      scan.has_worst = true;
      scan.worst_ratio = ratio;
      scan.worst_set = s;
    }
    if (!geq_with_slack(static_cast<double>(boundary), tau * size)) {
      scan.ok = false;
      if (stop_at_violation) return scan;
    }
  }
  return scan;
}

long long edges_within(const Graph& g, u64 mask) {
  long long cnt = 0;
  for (u64 bits = mask; bits; bits &= bits - 1)
    cnt += std::popcount(g.neighbor_mask(std::countr_zero(bits)) & mask);
  return cnt / 2;
}

ExpansionCertificate certificate_for(const Graph& g, u64 mask, const Rational& bound,
                                     bool exact) {
  ExpansionCertificate cert;
  cert.vertices = set_from_mask(mask);
  const int k = std::popcount(mask);
  cert.density = Rational(2 * edges_within(g, mask), k);
  cert.density_bound = bound;
  cert.tau = expansion_threshold(k);
  cert.exact = exact;
  return cert;
}

ExpansionCertificate expander_exact(const Graph& g, const Rational& bound) {
  const int n = g.vertex_count();
  for (int k = n; k >= 1; --k) {
    // All size-k candidates meeting the density bound, densest first; ties
    // stay in lexicographic order.
    std::vector<std::pair<long long, u64>> candidates;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      u64 mask = 0;
      for (int v : pick) mask |= u64{1} << v;
      const long long e = edges_within(g, mask);
      if (Rational(2 * e, k) >= bound) candidates.emplace_back(e, mask);
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [e, mask] : candidates) {
      const double tau = expansion_threshold(k);
      ExpansionScan scan = scan_expansion(g, mask, tau, true);
      if (!scan.ok) continue;
      ExpansionCertificate cert = certificate_for(g, mask, bound, true);
      cert.has_worst_set = scan.has_worst;
      if (scan.has_worst) {
        cert.worst_set = set_from_mask(scan.worst_set);
        cert.worst_ratio = scan.worst_ratio;
      }
      return cert;
    }
  }
  throw InternalError(
      "expander_subgraph: exact search exhausted every induced subgraph without a "
      "certificate; this contradicts the extraction guarantee");
}

VertexSet densest_component(const Graph& g, const VertexSet& verts) {
  const InducedSubgraph sub = induced_subgraph(g, verts);
  std::vector<VertexSet> comps = connected_components(sub.graph);
  int best = 0;
  Rational best_density(-1);
  for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
    const InducedSubgraph local = induced_subgraph(sub.graph, comps[i]);
    const Rational density = average_degree(local.graph);
    if (density > best_density ||
        (density == best_density && comps[i].size() > comps[best].size())) {
      best_density = density;
      best = i;
    }
  }
  VertexSet host;
  for (Vertex v : comps[best]) host.push_back(sub.to_parent[v]);
  return host;
}

ExpansionCertificate expander_heuristic(const Graph& g, const Rational& bound,
                                        std::uint64_t seed) {
  const int n = g.vertex_count();
  VertexSet all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  VertexSet current = densest_component(g, all);
  SeededRng rng(seed);

  for (int iter = 0; iter < 32; ++iter) {
    const InducedSubgraph sub = induced_subgraph(g, current);
    const int k = sub.graph.vertex_count();
    const double tau = expansion_threshold(k);
    VertexSet violating;  // local ids
    for (int sample = 0; sample < 64 && violating.empty() && k >= 2; ++sample) {
      const int size = rng.uniform_int(1, k / 2);
      VertexSet s;
      std::vector<char> taken(k, 0);
      while (static_cast<int>(s.size()) < size) {
        const int v = rng.uniform_int(0, k - 1);
        if (!taken[v]) {
          taken[v] = 1;
          s.push_back(v);
        }
      }
      s = sorted_unique(std::move(s));
      const VertexSet nb = neighborhood(sub.graph, s);
      if (!geq_with_slack(static_cast<double>(nb.size()),
                          tau * static_cast<double>(s.size())))
        violating = s;
    }
    if (violating.empty()) break;
    VertexSet remaining;
    std::vector<char> drop(k, 0);
    for (Vertex v : violating) drop[v] = 1;
    for (int v = 0; v < k; ++v)
      if (!drop[v]) remaining.push_back(sub.to_parent[v]);
    if (remaining.empty()) break;
    const VertexSet next = densest_component(g, remaining);
    const InducedSubgraph next_sub = induced_subgraph(g, next);
    if (average_degree(next_sub.graph) < bound) break;  // would lose the density guarantee
    current = next;
  }

  ExpansionCertificate cert = certificate_for(g, mask_of(current), bound, false);
  // Report the worst sampled-or-enumerated set when the subgraph is small
  // enough to enumerate cheaply; otherwise leave the worst set empty.
  if (static_cast<int>(current.size()) <= kExpanderExactCapDefault) {
    const InducedSubgraph sub = induced_subgraph(g, current);
    ExpansionScan scan =
        scan_expansion(sub.graph, all_bits(sub.graph.vertex_count()), cert.tau, false);
    if (scan.has_worst) {
      cert.has_worst_set = true;
      for (Vertex v : set_from_mask(scan.worst_set)) cert.worst_set.push_back(sub.to_parent[v]);
      cert.worst_ratio = scan.worst_ratio;
    }
  }
  return cert;
}

}  // namespace

ExpansionCertificate expander_subgraph(const Graph& g, SearchMode mode, int exact_cap,
                                       std::uint64_t heuristic_seed) {
  const int n = g.vertex_count();
  if (n == 0) throw DomainError("expander_subgraph: empty graph");
  const Rational bound = average_degree(g) * Rational(255, 256);
  if (mode == SearchMode::exact) {
    if (n > exact_cap || n > 18)
      throw RefusalError("expander_subgraph: exact mode capped at n <= " +
                         std::to_string(std::min(exact_cap, 18)));
    return expander_exact(g, bound);
  }
  return expander_heuristic(g, bound, heuristic_seed);
}

VertexExpansion vertex_expansion_exact(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap || n > 28)
    throw RefusalError("vertex_expansion_exact: capped at n <= " +
                       std::to_string(std::min(cap, 28)));
  if (n < 2) throw DomainError("vertex_expansion_exact: no admissible set when n < 2");
  VertexExpansion best;
  bool found = false;
  const u64 limit = u64{1} << n;
  for (u64 s = 1; s < limit; ++s) {
    if (2 * std::popcount(s) > n) continue;
    u64 nb = 0;
    for (u64 bits = s; bits; bits &= bits - 1) nb |= g.neighbor_mask(std::countr_zero(bits));
    const Rational ratio(std::popcount(nb & ~s), std::popcount(s));
    if (!found || ratio < best.min_ratio) {
      found = true;
      best.min_ratio = ratio;
      best.witness = set_from_mask(s);
    }
  }
  return best;
}

}  // namespace sparsesep
