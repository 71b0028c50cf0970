#include "sparsesep/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "sparsesep/errors.hpp"

namespace sparsesep {

namespace {

using u64 = std::uint64_t;

u64 full_mask(int n) { return n == 64 ? ~u64{0} : (u64{1} << n) - 1; }

// Vertices outside `eliminated` (and != v) reachable from v through eliminated
// vertices only: the degree v would have if eliminated next.
u64 elimination_neighbors(const Graph& g, u64 eliminated, int v) {
  u64 comp = u64{1} << v;
  u64 nb = 0;
  u64 frontier = comp;
  while (frontier) {
    u64 grow = 0;
    for (u64 bits = frontier; bits; bits &= bits - 1)
      grow |= g.neighbor_mask(std::countr_zero(bits));
    nb |= grow;
    frontier = grow & eliminated & ~comp;
    comp |= frontier;
  }
  return nb & ~eliminated & ~(u64{1} << v);
}

TreeDecomposition decomposition_from_elimination_order(const Graph& g,
                                                       const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<u64> bag_rest(n);  // later neighbors in the fill graph
  u64 eliminated = 0;
  for (int i = 0; i < n; ++i) {
    bag_rest[i] = elimination_neighbors(g, eliminated, order[i]);
    eliminated |= u64{1} << order[i];
  }
  TreeDecomposition td;
  td.bags.resize(n);
  td.parent.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    VertexSet bag = set_from_mask(bag_rest[i]);
    bag.push_back(order[i]);
    td.bags[i] = sorted_unique(std::move(bag));
    if (bag_rest[i]) {
      int first = -1;
      for (u64 bits = bag_rest[i]; bits; bits &= bits - 1) {
        const int w = std::countr_zero(bits);
        if (first < 0 || pos[w] < pos[first]) first = w;
      }
      td.parent[i] = pos[first];
    } else if (i + 1 < n) {
      td.parent[i] = i + 1;
    }
  }
  return td;
}

TreewidthResult empty_graph_decomposition() {
  TreeDecomposition td;
  td.bags.push_back({});
  td.parent.push_back(-1);
  return {-1, td};
}

// Greedy min-fill elimination: decent initial upper bound for the
// branch-and-bound.
std::pair<int, std::vector<int>> greedy_min_fill(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<u64> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbor_mask(v);
  u64 remaining = full_mask(n);
  std::vector<int> order;
  int width = -1;
  while (remaining) {
    int best = -1;
    long long best_fill = -1;
    for (u64 bits = remaining; bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      const u64 nb = adj[v] & remaining;
      long long fill = 0;
      for (u64 nbits = nb; nbits; nbits &= nbits - 1) {
        const int w = std::countr_zero(nbits);
        fill += std::popcount(nb & ~adj[w]) - 1;  // pairs missing, counted twice
      }
      if (best < 0 || fill < best_fill ||
          (fill == best_fill && std::popcount(adj[v] & remaining) <
                                    std::popcount(adj[best] & remaining))) {
        best = v;
        best_fill = fill;
      }
    }
    const u64 nb = adj[best] & remaining;
    width = std::max(width, std::popcount(nb));
    for (u64 nbits = nb; nbits; nbits &= nbits - 1) {
      const int w = std::countr_zero(nbits);
      adj[w] |= nb & ~(u64{1} << w);
    }
    remaining &= ~(u64{1} << best);
    order.push_back(best);
  }
  return {width, order};
}

class TreewidthBnB {
public:
  explicit TreewidthBnB(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  TreewidthResult run() {
    auto [ub_width, ub_order] = greedy_min_fill(g_);
    best_width_ = ub_width + 1;
    std::vector<u64> adj(n_);
    for (int v = 0; v < n_; ++v) adj[v] = g_.neighbor_mask(v);
    cur_order_.reserve(n_);
    dfs(adj, 0, -1);
    if (best_order_.empty()) best_order_ = ub_order;  // cannot happen, kept as belt
    return {best_width_, decomposition_from_elimination_order(g_, best_order_)};
  }

private:
  void dfs(std::vector<u64>& adj, u64 eliminated, int cur_max) {
    if (cur_max >= best_width_) return;
    const int remaining = n_ - std::popcount(eliminated);
    if (remaining == 0) {
      best_width_ = std::max(cur_max, 0);
      best_order_ = cur_order_;
      return;
    }
    if (remaining - 1 <= cur_max) {
      // Eliminating the rest in any order cannot exceed cur_max.
      best_width_ = cur_max;
      best_order_ = cur_order_;
      for (int v = 0; v < n_; ++v)
        if (!((eliminated >> v) & 1)) best_order_.push_back(v);
      return;
    }
    auto it = seen_.find(eliminated);
    if (it != seen_.end() && it->second <= cur_max) return;
    seen_[eliminated] = cur_max;

    // Simplicial vertices are always safe to eliminate first.
    for (int v = 0; v < n_; ++v) {
      if ((eliminated >> v) & 1) continue;
      const u64 nb = adj[v] & ~eliminated;
      bool simplicial = true;
      for (u64 bits = nb; simplicial && bits; bits &= bits - 1) {
        const int w = std::countr_zero(bits);
        simplicial = (adj[w] & nb & ~(u64{1} << w)) == (nb & ~(u64{1} << w));
      }
      if (simplicial) {
        descend(adj, eliminated, cur_max, v, nb);
        return;
      }
    }

    std::vector<int> cands;
    for (int v = 0; v < n_; ++v)
      if (!((eliminated >> v) & 1)) cands.push_back(v);
    std::stable_sort(cands.begin(), cands.end(), [&](int a, int b) {
      return std::popcount(adj[a] & ~eliminated) < std::popcount(adj[b] & ~eliminated);
    });
    for (int v : cands) descend(adj, eliminated, cur_max, v, adj[v] & ~eliminated);
  }

  void descend(std::vector<u64>& adj, u64 eliminated, int cur_max, int v, u64 nb) {
    const int deg = std::popcount(nb);
    if (std::max(cur_max, deg) >= best_width_) return;
    std::vector<u64> next = adj;
    for (u64 bits = nb; bits; bits &= bits - 1) {
      const int w = std::countr_zero(bits);
      next[w] |= nb & ~(u64{1} << w);
    }
    cur_order_.push_back(v);
    dfs(next, eliminated | (u64{1} << v), std::max(cur_max, deg));
    cur_order_.pop_back();
  }

  const Graph& g_;
  int n_;
  int best_width_ = 0;
  std::vector<int> best_order_;
  std::vector<int> cur_order_;
  std::unordered_map<u64, int> seen_;
};

}  // namespace

TreewidthResult treewidth_subset_dp(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return empty_graph_decomposition();
  if (n > kTreewidthDpMaxN) throw RefusalError("subset DP capped at n <= 18");
  const u64 states = u64{1} << n;
  std::vector<std::uint8_t> opt(states, 0), choice(states, 0);
  for (u64 s = 1; s < states; ++s) {
    int best = std::numeric_limits<int>::max();
    int best_v = -1;
    for (u64 bits = s; bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      const u64 rest = s & ~(u64{1} << v);
      const int q = std::popcount(elimination_neighbors(g, rest, v));
      const int value = std::max<int>(opt[rest], q);
      if (value < best) {
        best = value;
        best_v = v;
      }
    }
    opt[s] = static_cast<std::uint8_t>(best);
    choice[s] = static_cast<std::uint8_t>(best_v);
  }
  std::vector<int> order(n);
  u64 s = states - 1;
  for (int i = n - 1; i >= 0; --i) {
    order[i] = choice[s];
    s &= ~(u64{1} << choice[s]);
  }
  return {opt[states - 1], decomposition_from_elimination_order(g, order)};
}

TreewidthResult treewidth_branch_and_bound(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return empty_graph_decomposition();
  if (n > 30) throw RefusalError("branch-and-bound treewidth capped at n <= 30");
  return TreewidthBnB(g).run();
}

TreewidthResult treewidth_exact(const Graph& g, int cap) {
  const int n = g.vertex_count();
  if (n > cap)
    throw RefusalError("treewidth_exact: capped at n <= " + std::to_string(cap));
  TreewidthResult result =
      n <= kTreewidthDpMaxN ? treewidth_subset_dp(g) : treewidth_branch_and_bound(g);
  if (result.decomposition.width() != result.width)
    throw InternalError("decomposition width disagrees with computed treewidth");
  return result;
}

DecompositionVerdict validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  const int n = g.vertex_count();
  const int k = static_cast<int>(td.bags.size());
  if (static_cast<int>(td.parent.size()) != k)
    return {false, -1, "parent array size differs from bag count"};
  if (k == 0) return {false, -1, "decomposition has no bags"};
  int roots = 0;
  for (int i = 0; i < k; ++i) {
    if (td.parent[i] == -1) {
      ++roots;
      continue;
    }
    if (td.parent[i] < 0 || td.parent[i] >= k || td.parent[i] == i)
      return {false, -1, "bad parent link at node " + std::to_string(i)};
  }
  if (roots != 1) return {false, -1, "tree must have exactly one root"};
  // Parent links must be acyclic (they are, once reachability from the root
  // covers every node).
  {
    std::vector<std::vector<int>> children(k);
    int root = -1;
    for (int i = 0; i < k; ++i) {
      if (td.parent[i] == -1)
        root = i;
      else
        children[td.parent[i]].push_back(i);
    }
    std::vector<char> seen(k, 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    int cnt = 0;
    while (!q.empty()) {
      const int t = q.front();
      q.pop();
      ++cnt;
      for (int c : children[t])
        if (!seen[c]) {
          seen[c] = 1;
          q.push(c);
        }
    }
    if (cnt != k) return {false, -1, "parent links do not form a single tree"};
  }
  for (int i = 0; i < k; ++i) {
    Vertex prev = -1;
    for (Vertex v : td.bags[i]) {
      if (v < 0 || v >= n)
        return {false, -1, "bag " + std::to_string(i) + " holds out-of-range vertex"};
      if (v <= prev) return {false, -1, "bag " + std::to_string(i) + " not sorted-unique"};
      prev = v;
    }
  }
  std::vector<std::vector<int>> holding(n);
  for (int i = 0; i < k; ++i)
    for (Vertex v : td.bags[i]) holding[v].push_back(i);
  for (Vertex v = 0; v < n; ++v)
    if (holding[v].empty())
      return {false, -1, "vertex " + std::to_string(v) + " appears in no bag"};
  for (const auto& [u, v] : g.edges()) {
    bool covered = false;
    for (int i : holding[u]) {
      const auto& bag = td.bags[i];
      if (std::binary_search(bag.begin(), bag.end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      return {false, -1,
              "edge " + std::to_string(u) + "-" + std::to_string(v) + " not covered by any bag"};
  }
  // Connected-subtree property, per vertex.
  std::vector<std::vector<int>> tree_adj(k);
  for (int i = 0; i < k; ++i)
    if (td.parent[i] != -1) {
      tree_adj[i].push_back(td.parent[i]);
      tree_adj[td.parent[i]].push_back(i);
    }
  std::vector<int> mark(k, -1);
  for (Vertex v = 0; v < n; ++v) {
    for (int i : holding[v]) mark[i] = v;
    std::queue<int> q;
    q.push(holding[v][0]);
    mark[holding[v][0]] = -2 - v;
    int cnt = 0;
    while (!q.empty()) {
      const int t = q.front();
      q.pop();
      ++cnt;
      for (int s : tree_adj[t])
        if (mark[s] == v) {
          mark[s] = -2 - v;
          q.push(s);
        }
    }
    if (cnt != static_cast<int>(holding[v].size()))
      return {false, -1,
              "bags holding vertex " + std::to_string(v) + " do not induce a subtree"};
  }
  return {true, td.width(), ""};
}

Separator separator_from_decomposition(const Graph& g, const TreeDecomposition& td) {
  const DecompositionVerdict verdict = validate_decomposition(g, td);
  if (!verdict.valid)
    throw DomainError("separator_from_decomposition: invalid decomposition: " + verdict.reason);
  const int n = g.vertex_count();
  if (n == 0) return {{}, {}};
  auto fits = [&](long long side) { return 3 * side <= 2LL * n; };
  for (const auto& bag : td.bags) {
    std::vector<char> in_bag(n, 0);
    for (Vertex v : bag) in_bag[v] = 1;
    // Components of G - bag, packed largest-first onto the lighter side.
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> comps;
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s] || in_bag[s]) continue;
      VertexSet comp;
      std::queue<Vertex> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        comp.push_back(v);
        for (Vertex w : g.neighbors(v))
          if (!seen[w] && !in_bag[w]) {
            seen[w] = 1;
            q.push(w);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    std::stable_sort(comps.begin(), comps.end(), [](const VertexSet& l, const VertexSet& r) {
      if (l.size() != r.size()) return l.size() > r.size();
      return l.front() < r.front();
    });
    VertexSet x, y;
    for (auto& comp : comps) {
      VertexSet& side = x.size() <= y.size() ? x : y;
      side.insert(side.end(), comp.begin(), comp.end());
    }
    if (fits(static_cast<long long>(x.size())) && fits(static_cast<long long>(y.size()))) {
      VertexSet a = x, b = y;
      a.insert(a.end(), bag.begin(), bag.end());
      b.insert(b.end(), bag.begin(), bag.end());
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return {a, b};
    }
  }
  throw InternalError("no bag of a valid decomposition yields a balanced separator");
}

namespace {

void attach_to_all_bags(TreeDecomposition& td, const VertexSet& s) {
  for (auto& bag : td.bags) {
    bag.insert(bag.end(), s.begin(), s.end());
    bag = sorted_unique(std::move(bag));
  }
}

// Appends `sub` under a fresh root bag already present at index root_idx.
void graft(TreeDecomposition& dst, const TreeDecomposition& sub, int root_idx) {
  const int offset = static_cast<int>(dst.bags.size());
  for (int i = 0; i < static_cast<int>(sub.bags.size()); ++i) {
    dst.bags.push_back(sub.bags[i]);
    dst.parent.push_back(sub.parent[i] == -1 ? root_idx : sub.parent[i] + offset);
  }
}

struct SeparatorRecursion {
  const Graph& host;
  const SeparatorProvider& provider;
  std::vector<RecursionTraceEntry> trace;
  int max_order = 0;

  TreeDecomposition build(const VertexSet& verts, int depth, int max_order_so_far) {
    TreeDecomposition td;
    const int w = static_cast<int>(verts.size());
    if (w <= 2 || w <= max_order_so_far) {
      td.bags.push_back(verts);
      td.parent.push_back(-1);
      return td;
    }
    InducedSubgraph sub = induced_subgraph(host, verts);
    Separator sep = provider(sub.graph);
    const SeparatorVerdict verdict = validate_separator(sub.graph, sep);
    if (verdict.status != SeparatorStatus::valid_balanced)
      throw CertificationError(
          "separator provider returned an unusable separator: " +
          (verdict.status == SeparatorStatus::valid_unbalanced ? std::string("not balanced")
                                                               : verdict.reason));
    VertexSet s_local, a_only, b_only;
    {
      std::vector<char> in_a(w, 0), in_b(w, 0);
      for (Vertex v : sep.a) in_a[v] = 1;
      for (Vertex v : sep.b) in_b[v] = 1;
      for (int v = 0; v < w; ++v) {
        if (in_a[v] && in_b[v]) s_local.push_back(v);
        else if (in_a[v]) a_only.push_back(v);
        else b_only.push_back(v);
      }
    }
    const int order = static_cast<int>(s_local.size());
    trace.push_back({depth, w, order});
    max_order = std::max(max_order, order);
    const int next_max = std::max(max_order_so_far, order);

    VertexSet s_host;
    for (Vertex v : s_local) s_host.push_back(sub.to_parent[v]);
    td.bags.push_back(s_host);
    td.parent.push_back(-1);
    for (const VertexSet* part : {&a_only, &b_only}) {
      if (part->empty()) continue;
      VertexSet part_host;
      for (Vertex v : *part) part_host.push_back(sub.to_parent[v]);
      TreeDecomposition child = build(part_host, depth + 1, next_max);
      attach_to_all_bags(child, s_host);
      graft(td, child, 0);
    }
    return td;
  }
};

}  // namespace

SeparatorDecompositionResult decomposition_from_separators(const Graph& g,
                                                           const SeparatorProvider& provider) {
  SeparatorDecompositionResult result;
  if (g.vertex_count() == 0) {
    result.decomposition.bags.push_back({});
    result.decomposition.parent.push_back(-1);
    return result;
  }
  VertexSet all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
  SeparatorRecursion rec{g, provider, {}, 0};
  result.decomposition = rec.build(all, 0, 0);
  result.trace = std::move(rec.trace);
  result.max_separator_order = rec.max_order;
  return result;
}

SeparatorTreewidthReport check_separator_treewidth_bound(const Graph& g, int subgraph_limit,
                                                         int tw_cap) {
  SeparatorTreewidthReport report;
  report.k = subgraph_separator_bound(g, subgraph_limit).k;
  report.treewidth = treewidth_exact(g, tw_cap).width;
  report.ratio = Rational(report.treewidth, report.k);
  report.holds = report.treewidth <= kSeparatorTreewidthFactor * report.k;
  return report;
}

namespace {

class Degree3Search {
public:
  explicit Degree3Search(const Graph& g)
      : n_(g.vertex_count()), edges_(g.edges()), m_(g.edge_count()) {
    incident_.assign(n_, 0);
    for (int i = 0; i < m_; ++i) {
      incident_[edges_[i].first] |= u64{1} << i;
      incident_[edges_[i].second] |= u64{1} << i;
    }
    best_tw_ = 0;  // the edgeless subgraph
  }

  Degree3Witness run() {
    dfs(0, 0);
    std::vector<Edge> chosen;
    for (int i = 0; i < m_; ++i)
      if ((best_mask_ >> i) & 1) chosen.push_back(edges_[i]);
    return {Graph(n_, chosen), best_tw_};
  }

private:
  bool addable(u64 include, int i) const {
    const auto& [u, v] = edges_[i];
    return std::popcount(include & incident_[u]) < 3 &&
           std::popcount(include & incident_[v]) < 3;
  }

  void dfs(u64 include, u64 exclude) {
    int branch = -1;
    for (int i = 0; i < m_; ++i) {
      if (((include | exclude) >> i) & 1) continue;
      if (addable(include, i)) {
        branch = i;
        break;
      }
    }
    if (branch < 0) {
      // Leaf. Skip if some excluded edge could still be added: a maximal
      // superset appears elsewhere in the tree and dominates this one.
      for (int i = 0; i < m_; ++i)
        if (((exclude >> i) & 1) && addable(include, i)) return;
      evaluate(include);
      return;
    }
    // Dominance: if an excluded edge stays addable under everything this
    // branch could ever include, no leaf below is maximal.
    const u64 closure = include | closure_candidates(include, exclude);
    for (int i = 0; i < m_; ++i)
      if (((exclude >> i) & 1) && addable(closure, i)) return;
    dfs(include | (u64{1} << branch), exclude);
    dfs(include, exclude | (u64{1} << branch));
  }

  u64 closure_candidates(u64 include, u64 exclude) const {
    u64 extra = 0;
    for (int i = 0; i < m_; ++i)
      if (!(((include | exclude) >> i) & 1) && addable(include, i)) extra |= u64{1} << i;
    return extra;
  }

  void evaluate(u64 include) {
    std::vector<Edge> chosen;
    for (int i = 0; i < m_; ++i)
      if ((include >> i) & 1) chosen.push_back(edges_[i]);
    const int tw = treewidth_subset_dp(Graph(n_, chosen)).width;
    if (tw > best_tw_) {
      best_tw_ = tw;
      best_mask_ = include;
    }
  }

  int n_;
  std::vector<Edge> edges_;
  int m_;
  std::vector<u64> incident_;  // vertex -> mask over edge indices
  int best_tw_;
  u64 best_mask_ = 0;
};

}  // namespace

Degree3Witness max_treewidth_degree3_subgraph(const Graph& g, int max_n, int max_m) {
  if (g.vertex_count() == 0) throw DomainError("degree-3 subgraph search: empty graph");
  if (g.vertex_count() > max_n)
    throw RefusalError("degree-3 subgraph search capped at n <= " + std::to_string(max_n));
  if (g.edge_count() > max_m || g.edge_count() > 30)
    throw RefusalError("degree-3 subgraph search capped at m <= " +
                       std::to_string(std::min(max_m, 30)));
  return Degree3Search(g).run();
}

std::string write_tree_decomposition(const TreeDecomposition& td, int n) {
  std::ostringstream out;
  int width_plus_one = 0;
  for (const auto& bag : td.bags)
    width_plus_one = std::max(width_plus_one, static_cast<int>(bag.size()));
  out << "s " << td.bags.size() << ' ' << width_plus_one << ' ' << n << '\n';
  for (size_t i = 0; i < td.bags.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bags[i]) out << ' ' << v + 1;
    out << '\n';
  }
  for (size_t i = 0; i < td.bags.size(); ++i) {
    if (td.parent[i] == -1) continue;
    const int a = std::min<int>(static_cast<int>(i), td.parent[i]);
    const int b = std::max<int>(static_cast<int>(i), td.parent[i]);
    out << a + 1 << ' ' << b + 1 << '\n';
  }
  return out.str();
}

TreeDecomposition read_tree_decomposition(std::istream& in) {
  std::string line;
  long long bags = -1, width_plus_one = -1, n = -1;
  TreeDecomposition td;
  std::vector<std::pair<int, int>> tree_edges;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'c') continue;
    std::istringstream row(line);
    if (bags < 0) {
      std::string tag;
      if (!(row >> tag >> bags >> width_plus_one >> n) || tag != "s" || bags < 0)
        throw DomainError("decomposition file: malformed header '" + line + "'");
      td.bags.assign(bags, {});
      td.parent.assign(bags, -1);
      continue;
    }
    if (line[0] == 'b') {
      std::string tag;
      long long id = 0;
      if (!(row >> tag >> id) || tag != "b")
        throw DomainError("decomposition file: malformed bag line '" + line + "'");
      if (id < 1 || id > bags) throw DomainError("decomposition file: bag id out of range");
      VertexSet bag;
      long long v;
      while (row >> v) bag.push_back(static_cast<int>(v - 1));
      td.bags[id - 1] = sorted_unique(std::move(bag));
    } else {
      long long a, b;
      std::istringstream edge_row(line);
      if (!(edge_row >> a >> b) || a < 1 || b < 1 || a > bags || b > bags)
        throw DomainError("decomposition file: malformed tree edge '" + line + "'");
      tree_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
    }
  }
  if (bags < 0) throw DomainError("decomposition file: missing header");
  // Root the tree at node 0 and derive parent links.
  std::vector<std::vector<int>> adj(bags);
  for (const auto& [a, b] : tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(bags, 0);
  for (int root = 0; root < bags; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int t = q.front();
      q.pop();
      for (int s : adj[t])
        if (!seen[s]) {
          seen[s] = 1;
          td.parent[s] = t;
          q.push(s);
        }
    }
  }
  return td;
}

}  // namespace sparsesep
