#include "sparsesep/separator.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <sstream>

#include "sparsesep/errors.hpp"

namespace sparsesep {

namespace {

VertexSet set_intersection(const VertexSet& x, const VertexSet& y) {
  VertexSet out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(const VertexSet& x, const VertexSet& y) {
  VertexSet out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

bool side_fits(long long side, long long n) { return 3 * side <= 2 * n; }

}  // namespace

int separator_order(const Separator& s) {
  return static_cast<int>(set_intersection(s.a, s.b).size());
}

SeparatorVerdict validate_separator(const Graph& g, const Separator& s) {
  const int n = g.vertex_count();
  for (const VertexSet* side : {&s.a, &s.b}) {
    Vertex prev = -1;
    for (Vertex v : *side) {
      if (v < 0 || v >= n)
        return {SeparatorStatus::invalid, -1, "vertex " + std::to_string(v) + " out of range"};
      if (v <= prev) return {SeparatorStatus::invalid, -1, "side not sorted-unique"};
      prev = v;
    }
  }
  const VertexSet uni = set_union(s.a, s.b);
  if (static_cast<int>(uni.size()) != n)
    return {SeparatorStatus::invalid, -1, "A union B does not cover all vertices"};
  std::vector<char> in_a(n, 0), in_b(n, 0);
  for (Vertex v : s.a) in_a[v] = 1;
  for (Vertex v : s.b) in_b[v] = 1;
  for (const auto& [u, v] : g.edges()) {
    const bool u_only_a = in_a[u] && !in_b[u], u_only_b = in_b[u] && !in_a[u];
    const bool v_only_a = in_a[v] && !in_b[v], v_only_b = in_b[v] && !in_a[v];
    if ((u_only_a && v_only_b) || (u_only_b && v_only_a))
      return {SeparatorStatus::invalid, -1,
              "crossing edge " + std::to_string(u) + "-" + std::to_string(v)};
  }
  const int order = static_cast<int>(set_intersection(s.a, s.b).size());
  const long long a_minus = static_cast<long long>(s.a.size()) - order;
  const long long b_minus = static_cast<long long>(s.b.size()) - order;
  const bool balanced = side_fits(a_minus, n) && side_fits(b_minus, n);
  return {balanced ? SeparatorStatus::valid_balanced : SeparatorStatus::valid_unbalanced,
          order, ""};
}

namespace {

// Exact search: depth-first over cut sets (include the vertex first, so cut
// sets are visited in lexicographic set order), pruned once the cut size
// reaches the incumbent. A leaf is feasible when the components of G - C can
// be packed into two sides that both satisfy the exact balance test.
class ExactSeparatorSearch {
public:
  ExactSeparatorSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  Separator run() {
    dfs(0, 0, 0);
    if (best_order_ == std::numeric_limits<int>::max())
      throw InternalError("no balanced separator found");  // (V, V) always works
    const VertexSet cut = set_from_mask(best_cut_);
    const VertexSet x = set_from_mask(best_x_);
    VertexSet y;
    for (int v = 0; v < n_; ++v)
      if (!((best_cut_ >> v) & 1) && !((best_x_ >> v) & 1)) y.push_back(v);
    return {set_union(x, cut), set_union(y, cut)};
  }

private:
  void dfs(int idx, std::uint64_t cut, int cut_size) {
    if (cut_size >= best_order_) return;
    if (idx == n_) {
      std::uint64_t x_mask;
      if (packable(cut, x_mask)) {
        best_order_ = cut_size;
        best_cut_ = cut;
        best_x_ = x_mask;
      }
      return;
    }
    dfs(idx + 1, cut | (std::uint64_t{1} << idx), cut_size + 1);
    dfs(idx + 1, cut, cut_size);
  }

  bool packable(std::uint64_t cut, std::uint64_t& x_mask) {
    const std::uint64_t rest =
        (n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1) & ~cut;
    // Components of G - C, discovered lowest-vertex first.
    std::vector<std::uint64_t> comps;
    std::uint64_t todo = rest;
    while (todo) {
      std::uint64_t comp = todo & (~todo + 1);
      std::uint64_t frontier = comp;
      while (frontier) {
        std::uint64_t grow = 0;
        for (std::uint64_t bits = frontier; bits; bits &= bits - 1)
          grow |= g_.neighbor_mask(std::countr_zero(bits));
        frontier = grow & todo & ~comp;
        comp |= frontier;
      }
      comps.push_back(comp);
      todo &= ~comp;
    }
    const long long total = std::popcount(rest);
    const long long cap = (2LL * n_) / 3;
    const long long t_lo = std::max(0LL, total - cap);
    const long long t_hi = std::min(total, cap);
    if (t_lo > t_hi) return false;
    // Achievable side sums via subset-sum over component sizes; suffix tables
    // let us reconstruct the include-earliest assignment deterministically.
    const int m = static_cast<int>(comps.size());
    std::vector<std::uint64_t> suffix(m + 1, 0);  // bit t set: sum t achievable
    std::vector<int> sizes(m);
    for (int i = 0; i < m; ++i) sizes[i] = std::popcount(comps[i]);
    suffix[m] = 1;
    for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | (suffix[i + 1] << sizes[i]);
    long long t = -1;
    for (long long cand = t_lo; cand <= t_hi; ++cand)
      if ((suffix[0] >> cand) & 1) {
        t = cand;
        break;
      }
    if (t < 0) return false;
    x_mask = 0;
    long long remaining = t;
    for (int i = 0; i < m; ++i) {
      if (remaining >= sizes[i] && ((suffix[i + 1] >> (remaining - sizes[i])) & 1)) {
        x_mask |= comps[i];
        remaining -= sizes[i];
      }
    }
    return true;
  }

  const Graph& g_;
  int n_;
  int best_order_ = std::numeric_limits<int>::max();
  std::uint64_t best_cut_ = 0;
  std::uint64_t best_x_ = 0;
};

Vertex pseudo_peripheral(const Graph& g, const VertexSet& comp) {
  std::vector<int> dist = bfs_distances(g, comp.front());
  Vertex far = comp.front();
  for (Vertex v : comp)
    if (dist[v] > dist[far]) far = v;
  return far;
}

// Pack vertex groups onto the lighter side (largest first, ties by first
// member). With every group at most half the total this keeps both sides
// within the balance bound.
void pack_groups(std::vector<VertexSet> groups, VertexSet& x, VertexSet& y) {
  std::stable_sort(groups.begin(), groups.end(), [](const VertexSet& l, const VertexSet& r) {
    if (l.size() != r.size()) return l.size() > r.size();
    return l.front() < r.front();
  });
  for (auto& grp : groups) {
    VertexSet& side = x.size() <= y.size() ? x : y;
    side.insert(side.end(), grp.begin(), grp.end());
  }
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
}

Separator balanced_separator_heuristic(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return {{0}, {0}};
  std::vector<VertexSet> comps = connected_components(g);
  std::stable_sort(comps.begin(), comps.end(), [](const VertexSet& l, const VertexSet& r) {
    if (l.size() != r.size()) return l.size() > r.size();
    return l.front() < r.front();
  });
  if (side_fits(static_cast<long long>(comps.front().size()), n)) {
    VertexSet x, y;
    pack_groups(comps, x, y);
    return {x, y};
  }

  const VertexSet& big = comps.front();
  std::vector<VertexSet> others(comps.begin() + 1, comps.end());
  const Vertex root = pseudo_peripheral(g, big);
  std::vector<int> dist = bfs_distances(g, root);
  int depth = 0;
  for (Vertex v : big) depth = std::max(depth, dist[v]);
  std::vector<VertexSet> layers(depth + 1);
  for (Vertex v : big) layers[dist[v]].push_back(v);
  for (auto& layer : layers) std::sort(layer.begin(), layer.end());

  int best_layer = -1;
  for (int i = 0; i <= depth; ++i) {
    long long x_cnt = 0, y_cnt = 0;
    for (int j = 0; j < i; ++j) x_cnt += layers[j].size();
    for (int j = i + 1; j <= depth; ++j) y_cnt += layers[j].size();
    for (const auto& grp : others) (x_cnt <= y_cnt ? x_cnt : y_cnt) += grp.size();
    if (side_fits(x_cnt, n) && side_fits(y_cnt, n) &&
        (best_layer < 0 || layers[i].size() < layers[best_layer].size()))
      best_layer = i;
  }
  if (best_layer < 0) throw InternalError("BFS layering found no balanced cut layer");

  // side[v]: 0 = X, 1 = Y, 2 = cut
  std::vector<int> side(n, 0);
  long long x_cnt = 0, y_cnt = 0;
  for (int j = 0; j <= depth; ++j)
    for (Vertex v : layers[j]) {
      side[v] = j < best_layer ? 0 : j == best_layer ? 2 : 1;
      if (j < best_layer) ++x_cnt;
      if (j > best_layer) ++y_cnt;
    }
  {
    std::vector<VertexSet> grp_sorted = others;
    std::stable_sort(grp_sorted.begin(), grp_sorted.end(),
                     [](const VertexSet& l, const VertexSet& r) {
                       if (l.size() != r.size()) return l.size() > r.size();
                       return l.front() < r.front();
                     });
    for (const auto& grp : grp_sorted) {
      const int tgt = x_cnt <= y_cnt ? 0 : 1;
      for (Vertex v : grp) side[v] = tgt;
      (tgt == 0 ? x_cnt : y_cnt) += grp.size();
    }
  }

  // Refinement: a cut vertex with no neighbor on one side can move to the
  // other, as long as balance survives.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (side[v] != 2) continue;
      bool has_x = false, has_y = false;
      for (Vertex w : g.neighbors(v)) {
        has_x |= side[w] == 0;
        has_y |= side[w] == 1;
      }
      if (!has_y && side_fits(x_cnt + 1, n)) {
        side[v] = 0;
        ++x_cnt;
        changed = true;
      } else if (!has_x && side_fits(y_cnt + 1, n)) {
        side[v] = 1;
        ++y_cnt;
        changed = true;
      }
    }
  }

  VertexSet a, b;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] != 1) a.push_back(v);
    if (side[v] != 0) b.push_back(v);
  }
  return {a, b};
}

}  // namespace

Separator min_balanced_separator(const Graph& g, SearchMode mode, int exact_cap) {
  const int n = g.vertex_count();
  if (n == 0) throw DomainError("min_balanced_separator: empty graph");
  if (mode == SearchMode::exact) {
    if (n > exact_cap || n > 24)
      throw RefusalError("min_balanced_separator: exact mode capped at n <= " +
                         std::to_string(std::min(exact_cap, 24)));
    return ExactSeparatorSearch(g).run();
  }
  return balanced_separator_heuristic(g);
}

SubgraphSeparatorBound subgraph_separator_bound(const Graph& g, int limit) {
  const int n = g.vertex_count();
  if (n == 0) throw DomainError("subgraph_separator_bound: empty graph");
  if (n > limit)
    throw RefusalError("subgraph_separator_bound: capped at n <= " + std::to_string(limit));
  SubgraphSeparatorBound best;
  best.k = -1;
  // Connected induced subgraphs by size then lexicographic vertex set; ties on
  // k prefer the larger witness.
  for (int size = 1; size <= n; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      VertexSet verts(pick.begin(), pick.end());
      InducedSubgraph sub = induced_subgraph(g, verts);
      if (is_connected(sub.graph)) {
        Separator sep = min_balanced_separator(sub.graph, SearchMode::exact, limit);
        const int order = separator_order(sep);
        if (order > best.k || (order == best.k && size > best.witness.graph.vertex_count())) {
          best.k = order;
          best.witness = std::move(sub);
          best.witness_separator = std::move(sep);
        }
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return best;
}

std::string write_separator(const Separator& s) {
  std::ostringstream out;
  out << "A:";
  for (Vertex v : s.a) out << ' ' << v;
  out << "\nB:";
  for (Vertex v : s.b) out << ' ' << v;
  out << '\n';
  return out.str();
}

Separator read_separator(std::istream& in) {
  Separator s;
  bool saw_a = false, saw_b = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    VertexSet* side = nullptr;
    if (tag == "A:") {
      side = &s.a;
      saw_a = true;
    } else if (tag == "B:") {
      side = &s.b;
      saw_b = true;
    } else {
      throw DomainError("separator file: unexpected line '" + line + "'");
    }
    Vertex v;
    while (row >> v) side->push_back(v);
  }
  if (!saw_a || !saw_b) throw DomainError("separator file: need both A: and B: lines");
  s.a = sorted_unique(std::move(s.a));
  s.b = sorted_unique(std::move(s.b));
  return s;
}

}  // namespace sparsesep
