// Seeded randomized cross-checks: every fast kernel against an independent
// slow route, over corpora far wider than the hand-picked cases. All seeds
// fixed, so failures replay exactly.
#include <doctest.h>

#include "oracles.hpp"
#include "sparsesep/expander.hpp"
#include "sparsesep/generators.hpp"
#include "sparsesep/minor.hpp"
#include "sparsesep/numerics.hpp"
#include "sparsesep/orders.hpp"
#include "sparsesep/separator.hpp"
#include "sparsesep/treewidth.hpp"

using namespace sparsesep;

TEST_CASE("fuzz: the two treewidth engines agree and their witnesses validate") {
  for (int i = 0; i < 150; ++i) {
    const int n = 4 + i % 10;
    const double p = 0.15 + 0.1 * (i % 7);
    const Graph g = make_gnp(n, p, 50000 + i);
    const TreewidthResult dp = treewidth_subset_dp(g);
    const TreewidthResult bb = treewidth_branch_and_bound(g);
    REQUIRE(dp.width == bb.width);
    const auto vd = validate_decomposition(g, dp.decomposition);
    const auto vb = validate_decomposition(g, bb.decomposition);
    REQUIRE(vd.valid);
    REQUIRE(vd.width == dp.width);
    REQUIRE(vb.valid);
    REQUIRE(vb.width == bb.width);
  }
}

TEST_CASE("fuzz: exact separators match the ternary enumeration") {
  for (int i = 0; i < 120; ++i) {
    const int n = 3 + i % 7;
    const Graph g = make_gnp(n, 0.2 + 0.1 * (i % 6), 60000 + i);
    REQUIRE(separator_order(min_balanced_separator(g, SearchMode::exact)) ==
            oracles::brute_min_balanced_separator_order(g));
    REQUIRE(validate_separator(g, min_balanced_separator(g, SearchMode::heuristic)).status ==
            SeparatorStatus::valid_balanced);
  }
}

TEST_CASE("fuzz: minor searches stay valid and ordered") {
  for (int i = 0; i < 60; ++i) {
    const int n = 4 + i % 5;
    const Graph g = make_gnp(n, 0.25 + 0.15 * (i % 4), 80000 + i);
    for (int r = 0; r <= 2; ++r) {
      const DensestMinor exact = densest_shallow_minor(g, r, SearchMode::exact);
      const DensestMinor greedy = densest_shallow_minor(g, r, SearchMode::heuristic);
      REQUIRE(validate_model(g, exact.model).valid);
      REQUIRE(validate_model(g, greedy.model).valid);
      REQUIRE(greedy.density <= exact.density);
      REQUIRE(average_degree(contract(g, exact.model)) == exact.density);
    }
  }
}

TEST_CASE("fuzz: exact expander certificates survive re-enumeration") {
  for (int i = 0; i < 60; ++i) {
    const int n = 5 + i % 8;
    const Graph g = make_gnp(n, 0.2 + 0.1 * (i % 5), 90000 + i);
    const ExpansionCertificate cert = expander_subgraph(g, SearchMode::exact);
    const InducedSubgraph h = induced_subgraph(g, cert.vertices);
    REQUIRE(cert.density >= cert.density_bound);
    REQUIRE(average_degree(h.graph) == cert.density);
    if (h.graph.vertex_count() >= 2) {
      const VertexExpansion ve = vertex_expansion_exact(h.graph);
      REQUIRE(ve.min_ratio == cert.worst_ratio);
      REQUIRE(geq_with_slack(to_double(ve.min_ratio),
                             expansion_threshold(h.graph.vertex_count())));
    }
  }
}
