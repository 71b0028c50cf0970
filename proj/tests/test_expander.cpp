#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sparsesep/errors.hpp"
#include "sparsesep/expander.hpp"
#include "sparsesep/generators.hpp"
#include "sparsesep/numerics.hpp"

using namespace sparsesep;

TEST_CASE("expansion threshold clamps and decreases") {
  CHECK(expansion_threshold(4) == doctest::Approx(1.0 / 512.0));
  CHECK(expansion_threshold(2) == expansion_threshold(4));  // clamped below 4
  CHECK(expansion_threshold(1) == expansion_threshold(4));
  for (int n = 5; n <= 1000; n += 7) CHECK(expansion_threshold(n) < expansion_threshold(4));
  CHECK(expansion_threshold(1 << 20) > 0.0);
}

TEST_CASE("vertex expansion exact values") {
  const auto c6 = vertex_expansion_exact(make_cycle(6));
  CHECK(c6.min_ratio == Rational(2, 3));
  CHECK(c6.witness == VertexSet{0, 1, 2});

  const auto k4 = vertex_expansion_exact(make_clique(4));
  CHECK(k4.min_ratio == Rational(1));

  const Graph two_edges(4, {{0, 1}, {2, 3}});
  const auto disconnected = vertex_expansion_exact(two_edges);
  CHECK(disconnected.min_ratio == Rational(0));
  CHECK(disconnected.witness == VertexSet{0, 1});

  CHECK_THROWS_AS(vertex_expansion_exact(make_gnp(23, 0.2, 1)), RefusalError);
  CHECK_THROWS_AS(vertex_expansion_exact(Graph(1)), DomainError);
}

TEST_CASE("whole-clique certificates") {
  const ExpansionCertificate cert = expander_subgraph(make_clique(5), SearchMode::exact);
  CHECK(cert.exact);
  CHECK(cert.vertices == VertexSet{0, 1, 2, 3, 4});
  CHECK(cert.density == Rational(4));
  CHECK(cert.density_bound == Rational(255 * 4, 256));
  CHECK(cert.worst_ratio == Rational(3, 2));  // |S| = 2 inside K5
  CHECK(cert.has_worst_set);
}

TEST_CASE("a single edge certifies vacuously against the clamped threshold") {
  const ExpansionCertificate cert = expander_subgraph(make_path(2), SearchMode::exact);
  CHECK(cert.exact);
  CHECK(cert.vertices.size() == 2);
  CHECK(cert.worst_ratio == Rational(1));  // the singleton S sees its neighbor
  CHECK(cert.tau < 1.0);
}

TEST_CASE("disjoint union: the certificate lands on the dense side") {
  const Graph g = disjoint_union(make_clique(5), make_path(10));  // n = 15 -> heuristic
  const ExpansionCertificate cert = expander_subgraph(g, SearchMode::heuristic);
  CHECK_FALSE(cert.exact);
  CHECK(cert.vertices == VertexSet{0, 1, 2, 3, 4});
  CHECK(cert.density == Rational(4));
  CHECK(cert.density >= cert.density_bound);
  CHECK(cert.density_bound == Rational(2 * 19 * 255, 15 * 256));

  // the exact searcher agrees once within its cap
  const Graph small = disjoint_union(make_clique(5), make_path(9));  // n = 14
  const ExpansionCertificate exact = expander_subgraph(small, SearchMode::exact);
  CHECK(exact.exact);
  CHECK(exact.vertices == VertexSet{0, 1, 2, 3, 4});
}

TEST_CASE("exact certificates hold up under independent re-enumeration") {
  for (const char* spec : {"cycle:8", "clique:6", "grid:2:3", "petersen", "gnp:12:0.3:5",
                           "gnp:14:0.5:6", "star:9", "path:12"}) {
    const Graph g = generate(parse_family_spec(spec));
    const ExpansionCertificate cert = expander_subgraph(g, SearchMode::exact);
    CHECK(cert.exact);
    CHECK(cert.density >= cert.density_bound);
    const InducedSubgraph h = induced_subgraph(g, cert.vertices);
    CHECK(average_degree(h.graph) == cert.density);
    if (h.graph.vertex_count() >= 2) {
      const auto expansion = vertex_expansion_exact(h.graph);
      CHECK(expansion.min_ratio == cert.worst_ratio);
      CHECK(geq_with_slack(to_double(expansion.min_ratio), cert.tau));
    }
  }
}

TEST_CASE("heuristic certificates keep the density guarantee") {
  for (const char* spec : {"gnp:30:0.2:7", "grid:2:6", "grid_subgraph:2:6:0.7:3"}) {
    const Graph g = generate(parse_family_spec(spec));
    const ExpansionCertificate cert = expander_subgraph(g, SearchMode::heuristic);
    CHECK_FALSE(cert.exact);
    CHECK(cert.density >= cert.density_bound);
    const InducedSubgraph h = induced_subgraph(g, cert.vertices);
    CHECK(is_connected(h.graph));
  }
}

TEST_CASE("heuristic extraction is deterministic for a fixed seed") {
  const Graph g = make_gnp(30, 0.2, 7);
  const ExpansionCertificate a = expander_subgraph(g, SearchMode::heuristic, 14, 5);
  const ExpansionCertificate b = expander_subgraph(g, SearchMode::heuristic, 14, 5);
  CHECK(a.vertices == b.vertices);
  CHECK(a.density == b.density);
}

TEST_CASE("expander caps and degenerate inputs") {
  CHECK_THROWS_AS(expander_subgraph(make_gnp(15, 0.4, 2), SearchMode::exact), RefusalError);
  CHECK_THROWS_AS(expander_subgraph(Graph(0), SearchMode::exact), DomainError);
  // a lone vertex of an edgeless graph certifies vacuously
  const ExpansionCertificate cert = expander_subgraph(Graph(3), SearchMode::exact);
  CHECK(cert.vertices.size() == 1);
  CHECK(cert.density == Rational(0));
  CHECK_FALSE(cert.has_worst_set);
}
