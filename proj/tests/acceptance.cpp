// Acceptance suite: one line per criterion, nonzero exit when any fails.
// argv[1] is the path to the CLI binary (used by the determinism criterion).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sparsesep/bounds.hpp"
#include "sparsesep/errors.hpp"
#include "sparsesep/expander.hpp"
#include "sparsesep/experiments.hpp"
#include "sparsesep/generators.hpp"
#include "sparsesep/minor.hpp"
#include "sparsesep/numerics.hpp"
#include "sparsesep/orders.hpp"
#include "sparsesep/rng.hpp"
#include "sparsesep/separator.hpp"
#include "sparsesep/treewidth.hpp"

using namespace sparsesep;

namespace {

std::string g_cli_path;

// 50 seeded random graphs with n <= 16 and p cycling over {0.2, 0.4, 0.6}.
std::vector<Graph> seeded_corpus() {
  std::vector<Graph> corpus;
  const double ps[] = {0.2, 0.4, 0.6};
  for (int i = 0; i < 50; ++i) {
    const int n = 4 + i % 13;  // 4..16
    corpus.push_back(make_gnp(n, ps[i % 3], 1000 + i));
  }
  return corpus;
}

// One representative per isomorphism class of connected graphs on <= max_n
// vertices, via canonical (minimal) edge bitmasks over all relabelings.
std::vector<Graph> connected_classes(int max_n) {
  std::vector<Graph> reps;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int m = static_cast<int>(pairs.size());
    std::vector<int> pair_index(n * n, -1);
    for (int i = 0; i < m; ++i)
      pair_index[pairs[i].first * n + pairs[i].second] = i;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<int>> perms;
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<unsigned> canon_seen;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      unsigned canon = ~0u;
      for (const auto& p : perms) {
        unsigned relabeled = 0;
        for (int i = 0; i < m; ++i) {
          if (!((mask >> i) & 1)) continue;
          int a = p[pairs[i].first], b = p[pairs[i].second];
          if (a > b) std::swap(a, b);
          relabeled |= 1u << pair_index[a * n + b];
        }
        canon = std::min(canon, relabeled);
      }
      if (canon != mask) continue;  // not the class representative
      std::vector<Edge> edges;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) edges.push_back(pairs[i]);
      const Graph g(n, edges);
      if (is_connected(g)) reps.push_back(g);
    }
  }
  return reps;
}

LinearOrder random_order(int n, SeededRng& rng) {
  std::vector<Vertex> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(seq[i], seq[rng.uniform_int(0, i)]);
  return order_from_sequence(seq);
}

bool criterion1(std::string& detail) {
  int checked = 0;
  for (const Graph& g : seeded_corpus()) {
    const TreewidthResult tw = treewidth_exact(g);
    const Separator sep = separator_from_decomposition(g, tw.decomposition);
    const SeparatorVerdict verdict = validate_separator(g, sep);
    if (verdict.status != SeparatorStatus::valid_balanced) {
      detail = "instance " + std::to_string(checked) + ": separator not valid_balanced";
      return false;
    }
    if (verdict.order > tw.width + 1) {
      detail = "instance " + std::to_string(checked) + ": order " +
               std::to_string(verdict.order) + " > tw+1 = " + std::to_string(tw.width + 1);
      return false;
    }
    ++checked;
  }
  detail = "50/50 instances: separator valid_balanced with order <= tw+1";
  return true;
}

bool criterion2(std::string& detail) {
  const SeparatorProvider exact = [](const Graph& g) {
    return min_balanced_separator(g, SearchMode::exact);
  };
  int checked = 0;
  for (const Graph& g : seeded_corpus()) {
    const auto result = decomposition_from_separators(g, exact);
    if (!validate_decomposition(g, result.decomposition).valid) {
      detail = "instance " + std::to_string(checked) + ": invalid decomposition";
      return false;
    }
    const int bound = 1 + result.max_separator_order * ceil_log_3_2(g.vertex_count());
    if (result.decomposition.width() > bound) {
      detail = "instance " + std::to_string(checked) + ": width " +
               std::to_string(result.decomposition.width()) + " > " + std::to_string(bound);
      return false;
    }
    ++checked;
  }
  detail = "50/50 instances: valid decomposition with width <= 1 + k_max*ceil(log_1.5 n)";
  return true;
}

bool criterion3(std::string& detail) {
  Rational max_ratio(0);
  int checked = 0;
  std::vector<Graph> corpus;
  for (const Graph& g : seeded_corpus())
    if (g.vertex_count() <= 10) corpus.push_back(g);
  for (const char* spec : {"cycle:6", "clique:5", "grid:2:3", "star:6", "path:10", "petersen"})
    corpus.push_back(generate(parse_family_spec(spec)));
  for (const Graph& g : corpus) {
    const auto report = check_separator_treewidth_bound(g);
    if (!report.holds) {
      detail = "instance " + std::to_string(checked) + ": tw " +
               std::to_string(report.treewidth) + " > 105k with k = " + std::to_string(report.k);
      return false;
    }
    max_ratio = std::max(max_ratio, report.ratio);
    ++checked;
  }
  detail = std::to_string(checked) + " graphs: tw <= 105k; max observed tw/k = " +
           to_string(max_ratio);
  return true;
}

bool criterion4(std::string& detail) {
  SeededRng rng(77);
  const double ps[] = {0.2, 0.4, 0.6};
  for (int i = 0; i < 100; ++i) {
    const int n = 8 + rng.uniform_int(0, 12);  // 8..20
    const Graph g = make_gnp(n, ps[i % 3], rng.next_u64());
    const int r = 1 + i % 2;
    const MinorModel m = random_ball_packing_model(g, r, rng);
    const LinearOrder L = random_order(n, rng);
    const OrderTransferReport report = check_order_transfer(g, m, L);
    if (!report.per_vertex_ok) {
      detail = "triple " + std::to_string(i) + ": backcount " +
               std::to_string(report.max_backcount) + " + 1 > col " +
               std::to_string(report.coloring_value);
      return false;
    }
    if (!report.average_degree_ok) {
      detail = "triple " + std::to_string(i) + ": density " +
               to_string(report.minor_average_degree) + " > 2*col";
      return false;
    }
  }
  detail = "100/100 triples: per-vertex and average-degree assertions hold";
  return true;
}

bool criterion5(std::string& detail) {
  std::vector<Graph> corpus = connected_classes(6);
  const size_t classes = corpus.size();
  if (classes != 143) {
    detail = "expected 143 connected classes on <= 6 vertices, found " +
             std::to_string(classes);
    return false;
  }
  for (int i = 0; i < 20; ++i)
    corpus.push_back(make_gnp(7 + i % 2, i % 2 ? 0.5 : 0.35, 4000 + i));
  int checked = 0;
  for (const Graph& g : corpus) {
    const Rational subgraph_best = oracles::brute_max_subgraph_average_degree(g);
    for (int r = 0; r <= 2; ++r) {
      const DensestMinor exact = densest_shallow_minor(g, r, SearchMode::exact);
      const DensestMinor greedy = densest_shallow_minor(g, r, SearchMode::heuristic);
      if (greedy.density > exact.density) {
        detail = "graph " + std::to_string(checked) + " r=" + std::to_string(r) +
                 ": greedy " + to_string(greedy.density) + " > exact " +
                 to_string(exact.density);
        return false;
      }
      if (r == 0 && exact.density != subgraph_best) {
        detail = "graph " + std::to_string(checked) + ": exact r=0 density " +
                 to_string(exact.density) + " != max subgraph avg degree " +
                 to_string(subgraph_best);
        return false;
      }
    }
    ++checked;
  }
  detail = std::to_string(checked) + " graphs (" + std::to_string(classes) +
           " exhaustive classes + 20 seeded): greedy <= exact, exact r=0 matches subgraphs";
  return true;
}

bool criterion6(std::string& detail) {
  std::vector<Graph> corpus;
  for (const Graph& g : seeded_corpus())
    if (g.vertex_count() <= 14) corpus.push_back(g);
  for (const char* spec : {"clique:5", "petersen", "cycle:6", "grid:2:3", "star:6", "path:10"})
    corpus.push_back(generate(parse_family_spec(spec)));
  corpus.push_back(disjoint_union(make_clique(5), make_path(9)));
  corpus.push_back(disjoint_union(make_path(4), make_path(4)));
  int checked = 0;
  for (const Graph& g : corpus) {
    ExpansionCertificate cert;
    try {
      cert = expander_subgraph(g, SearchMode::exact);
    } catch (const InternalError& e) {
      detail = "instance " + std::to_string(checked) + ": internal error: " + e.what();
      return false;
    }
    if (!cert.exact || cert.density < cert.density_bound) {
      detail = "instance " + std::to_string(checked) + ": density bound violated";
      return false;
    }
    const InducedSubgraph h = induced_subgraph(g, cert.vertices);
    if (h.graph.vertex_count() >= 2) {
      const VertexExpansion expansion = vertex_expansion_exact(h.graph);
      if (!geq_with_slack(to_double(expansion.min_ratio),
                          expansion_threshold(h.graph.vertex_count()))) {
        detail = "instance " + std::to_string(checked) + ": expansion " +
                 to_string(expansion.min_ratio) + " below tau";
        return false;
      }
    }
    ++checked;
  }
  detail = std::to_string(checked) +
           " graphs: exact certificates meet the density and expansion bounds";
  return true;
}

bool criterion7(std::string& detail) {
  const GridExperimentResult result = grid_experiment(2, {3, 4, 5, 6, 7, 8}, 0, 2);
  for (const auto& row : result.rows)
    if (row.sep_mode == "exact" && row.sep_order > row.side) {
      detail = "side " + std::to_string(row.side) + ": exact order " +
               std::to_string(row.sep_order) + " > side";
      return false;
    }
  if (result.fit.exponent < 0.35 || result.fit.exponent > 0.70) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", result.fit.exponent);
    detail = std::string("fitted exponent ") + buf + " outside [0.35, 0.70]";
    return false;
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", result.fit.exponent);
  detail = std::string("exponent ") + buf + " in [0.35, 0.70]; exact rows obey order <= side";
  return true;
}

bool criterion8(std::string& detail) {
  const std::vector<Graph> corpus = connected_classes(6);
  SeededRng rng(123);
  for (size_t idx = 0; idx < corpus.size(); ++idx) {
    const Graph& g = corpus[idx];
    const LinearOrder degen = degeneracy_order(g);
    if (coloring_number(g, degen, 1, ReachKind::strong) != degeneracy(g) + 1) {
      detail = "class " + std::to_string(idx) + ": degeneracy-order radius-1 value mismatch";
      return false;
    }
    for (int trial = 0; trial < 10; ++trial) {
      const LinearOrder L = random_order(g.vertex_count(), rng);
      int prev_strong = 0, prev_weak = 0;
      for (int r = 0; r <= 4; ++r) {
        const int s = coloring_number(g, L, r, ReachKind::strong);
        const int w = coloring_number(g, L, r, ReachKind::weak);
        if (s > w) {
          detail = "class " + std::to_string(idx) + ": strong > weak at r=" + std::to_string(r);
          return false;
        }
        if (s < prev_strong || w < prev_weak) {
          detail = "class " + std::to_string(idx) + ": value decreased in r";
          return false;
        }
        prev_strong = s;
        prev_weak = w;
      }
    }
  }
  // exact best order against an independent full-permutation brute force
  std::vector<Graph> brute_corpus;
  for (const Graph& g : corpus)
    if (g.vertex_count() <= 5) brute_corpus.push_back(g);
  for (int i = 0; i < 5; ++i) brute_corpus.push_back(make_gnp(6 + i % 2, 0.5, 900 + i));
  for (size_t idx = 0; idx < brute_corpus.size(); ++idx) {
    const Graph& g = brute_corpus[idx];
    for (int r : {1, 2})
      for (ReachKind kind : {ReachKind::strong, ReachKind::weak}) {
        const int fast = best_order(g, r, kind, SearchMode::exact).value;
        int brute = 1 << 20;
        std::vector<Vertex> seq(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) seq[v] = v;
        do {
          brute = std::min(brute, oracles::brute_coloring_number(
                                      g, order_from_sequence(seq), r, kind));
        } while (std::next_permutation(seq.begin(), seq.end()));
        if (fast != brute) {
          detail = "brute graph " + std::to_string(idx) + ": exact best " +
                   std::to_string(fast) + " != brute " + std::to_string(brute);
          return false;
        }
      }
  }
  detail = std::to_string(corpus.size()) +
           " classes x 10 orders: strong <= weak, monotone in r, degeneracy pinned; "
           "exact best order matches permutation brute force";
  return true;
}

bool criterion9(std::string& detail) {
  if (g_cli_path.empty()) {
    detail = "CLI path not supplied";
    return false;
  }
  namespace fs = std::filesystem;
  const fs::path dir = fs::path("acceptance_tmp");
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> verbs = {
      {"gen", "gen --spec gnp:12:0.3:5"},
      {"sep", "sep --spec grid:2:4 --mode exact"},
      {"tw", "tw --spec cycle:7"},
      {"minor", "minor --spec petersen --r 1 --mode greedy"},
      {"colnum", "colnum --spec cycle:6 --r 2 --kind strong --mode heuristic"},
      {"expander", "expander --spec clique:5 --mode exact"},
      {"chain-check", "chain-check --spec grid:2:3 --r 1"},
      {"grid-exp", "grid-exp --d 2 --sides 3,4,5 --r-max 1 --seed 3"},
      {"survey", "survey --corpus path:6,clique:4,cycle:6 --r-max 2 --seed 3"},
  };
  for (const auto& [name, args] : verbs) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (name + "_" + std::to_string(run) + ".out");
      const std::string cmd = "'" + g_cli_path + "' " + args + " --out '" + out.string() +
                              "' > /dev/null 2>&1";
      const int rc = std::system(cmd.c_str());
      if (rc != 0) {
        detail = name + ": exit code " + std::to_string(rc);
        return false;
      }
      std::ifstream in(out, std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      outputs[run] = buf.str();
      if (outputs[run].empty()) {
        detail = name + ": empty output";
        return false;
      }
    }
    if (outputs[0] != outputs[1]) {
      detail = name + ": outputs differ between runs";
      return false;
    }
  }
  detail = std::to_string(verbs.size()) + " verbs run twice: byte-identical artifacts";
  return true;
}

struct Criterion {
  int id;
  std::string label;
  double time_budget_s;  // 0 = none stated
  std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];
  const std::vector<Criterion> criteria = {
      {1, "separator from exact decomposition is balanced within width+1", 60, criterion1},
      {2, "recursive separator decomposition obeys the trace width bound", 0, criterion2},
      {3, "treewidth at most 105x the subgraph separator bound", 300, criterion3},
      {4, "order transfer bound on random ball-packing triples", 0, criterion4},
      {5, "shallow-minor searches agree with independent subgraph oracles", 0, criterion5},
      {6, "expander subgraph certificates enumerate fully and hold", 600, criterion6},
      {7, "grid separator scaling exponent sits in the target band", 300, criterion7},
      {8, "coloring number invariants and exact-order brute force", 0, criterion8},
      {9, "every CLI verb is byte-deterministic across reruns", 0, criterion9},
  };
  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && criterion.time_budget_s > 0 && elapsed > criterion.time_budget_s) {
      ok = false;
      detail = "over time budget: " + std::to_string(elapsed) + "s > " +
               std::to_string(criterion.time_budget_s) + "s";
    }
    char line[512];
    std::snprintf(line, sizeof(line), "criterion %d: %s — %s [%s] (%.2fs)", criterion.id,
                  ok ? "PASS" : "FAIL", criterion.label.c_str(), detail.c_str(), elapsed);
    std::cout << line << std::endl;
    if (!ok) ++failures;
  }
  if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
