#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "sparsesep/errors.hpp"
#include "sparsesep/generators.hpp"
#include "sparsesep/minor.hpp"

using namespace sparsesep;

namespace {

MinorModel c6_triangle_model() {
  MinorModel m;
  m.depth = 1;
  m.branch_sets = {{0, 1}, {2, 3}, {4, 5}};
  m.centers = {0, 2, 4};
  m.minor_edges = {{0, 1}, {0, 2}, {1, 2}};
  m.edge_witnesses = {{1, 2}, {0, 5}, {3, 4}};
  return m;
}

MinorModel petersen_spoke_model() {
  MinorModel m;
  m.depth = 1;
  for (int i = 0; i < 5; ++i) {
    m.branch_sets.push_back({i, i + 5});
    m.centers.push_back(i);
  }
  return m;
}

std::vector<int> degree_multiset(const Graph& g) {
  std::vector<int> d;
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST_CASE("model validation accepts the triangle model and rejects mutations") {
  const Graph c6 = make_cycle(6);
  MinorModel m = c6_triangle_model();
  CHECK(validate_model(c6, m).valid);

  MinorModel shallow = m;
  shallow.depth = 0;
  const auto v1 = validate_model(c6, shallow);
  CHECK_FALSE(v1.valid);
  CHECK(v1.reason.find("radius") != std::string::npos);

  MinorModel overlap = m;
  overlap.branch_sets = {{0, 1}, {1, 2}, {4, 5}};
  const auto v2 = validate_model(c6, overlap);
  CHECK_FALSE(v2.valid);
  CHECK(v2.reason.find("overlap") != std::string::npos);

  MinorModel bad_witness = m;
  bad_witness.edge_witnesses[0] = {0, 3};  // not a host edge
  CHECK_FALSE(validate_model(c6, bad_witness).valid);

  MinorModel wrong_witness = m;
  wrong_witness.edge_witnesses[0] = {3, 4};  // host edge, but joins the wrong sets
  CHECK_FALSE(validate_model(c6, wrong_witness).valid);

  MinorModel disconnected = m;
  disconnected.branch_sets = {{0, 3}, {1, 2}, {4, 5}};
  disconnected.centers = {0, 1, 4};
  disconnected.minor_edges = {{0, 1}};
  disconnected.edge_witnesses = {{0, 1}};
  const auto v3 = validate_model(c6, disconnected);
  CHECK_FALSE(v3.valid);
  CHECK(v3.reason.find("disconnected") != std::string::npos);
}

TEST_CASE("contract produces the minor graph") {
  const Graph c6 = make_cycle(6);
  const Graph tri = contract(c6, c6_triangle_model());
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);

  // spoke pairs of the Petersen graph contract to K5 once all realizable
  // edges are filled in
  const Graph pet = make_petersen();
  MinorModel spokes = petersen_spoke_model();
  std::vector<int> owner(10);
  for (int b = 0; b < 5; ++b)
    for (Vertex v : spokes.branch_sets[b]) owner[v] = b;
  for (const auto& [u, v] : pet.edges()) {
    const Edge me = normalized_edge(owner[u], owner[v]);
    if (owner[u] == owner[v]) continue;
    bool seen = false;
    for (const Edge& e : spokes.minor_edges) seen |= e == me;
    if (!seen) {
      spokes.minor_edges.push_back(me);
      spokes.edge_witnesses.push_back({u, v});
    }
  }
  CHECK(validate_model(pet, spokes).valid);
  const Graph k5 = contract(pet, spokes);
  CHECK(k5.vertex_count() == 5);
  CHECK(k5.edge_count() == 10);

  CHECK_THROWS_AS(contract(c6, MinorModel{-1, {}, {}, {}, {}}), DomainError);
}

TEST_CASE("identity model contracts to an isomorphic copy") {
  for (const char* spec : {"cycle:6", "petersen", "gnp:9:0.4:4"}) {
    const Graph g = generate(parse_family_spec(spec));
    const MinorModel id = identity_model(g);
    CHECK(validate_model(g, id).valid);
    const Graph back = contract(g, id);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_count() == g.edge_count());
    CHECK(degree_multiset(back) == degree_multiset(g));
  }
}

TEST_CASE("host subgraph view reports the union of branch sets") {
  const Graph c6 = make_cycle(6);
  const InducedSubgraph host = model_host_subgraph(c6, c6_triangle_model());
  CHECK(host.graph.vertex_count() == 6);
  CHECK(host.to_parent == VertexSet{0, 1, 2, 3, 4, 5});

  MinorModel partial = c6_triangle_model();
  partial.branch_sets = {{0, 1}, {2, 3}};
  partial.centers = {0, 2};
  partial.minor_edges = {{0, 1}};
  partial.edge_witnesses = {{1, 2}};
  const InducedSubgraph part = model_host_subgraph(c6, partial);
  CHECK(part.graph.vertex_count() == 4);
}

TEST_CASE("densest shallow minor, exact mode") {
  // trees can only yield forests
  for (const char* spec : {"path:8", "star:7"}) {
    const Graph g = generate(parse_family_spec(spec));
    for (int r = 0; r <= 2; ++r)
      CHECK(densest_shallow_minor(g, r, SearchMode::exact).density < Rational(2));
  }
  // every minor of a cycle is a cycle or a path
  const Graph c6 = make_cycle(6);
  const DensestMinor best = densest_shallow_minor(c6, 1, SearchMode::exact);
  CHECK(best.density == Rational(2));
  CHECK(validate_model(c6, best.model).valid);
}

TEST_CASE("exact depth-0 density equals the max induced average degree") {
  for (const char* spec : {"cycle:6", "clique:5", "star:5", "grid:2:3", "gnp:7:0.5:3",
                           "gnp:8:0.35:9"}) {
    const Graph g = generate(parse_family_spec(spec));
    CHECK(densest_shallow_minor(g, 0, SearchMode::exact).density ==
          oracles::brute_max_subgraph_average_degree(g));
  }
}

TEST_CASE("greedy density never beats exact and both models validate") {
  for (const char* spec : {"cycle:6", "clique:5", "star:6", "path:7", "grid:2:3",
                           "gnp:8:0.3:5", "gnp:9:0.5:6"}) {
    const Graph g = generate(parse_family_spec(spec));
    for (int r = 0; r <= 2; ++r) {
      const DensestMinor exact = densest_shallow_minor(g, r, SearchMode::exact);
      const DensestMinor greedy = densest_shallow_minor(g, r, SearchMode::heuristic);
      CHECK(validate_model(g, exact.model).valid);
      CHECK(validate_model(g, greedy.model).valid);
      CHECK(greedy.density <= exact.density);
      CHECK(exact.model.depth == r);
      // reported density equals the contracted minor's actual average degree
      const Graph minor = contract(g, exact.model);
      CHECK(average_degree(minor) == exact.density);
    }
  }
}

TEST_CASE("greedy finds a dense minor of the Petersen graph at depth 1") {
  const DensestMinor result = densest_shallow_minor(make_petersen(), 1, SearchMode::heuristic);
  CHECK(result.density >= Rational(3));
  CHECK(validate_model(make_petersen(), result.model).valid);
}

TEST_CASE("expansion profile is monotone and bounded") {
  const Graph tree = make_star(7);
  for (const auto& entry : expansion_profile(tree, 3, SearchMode::exact, 9))
    CHECK(entry.density < Rational(2));

  const auto c6 = expansion_profile(make_cycle(6), 2, SearchMode::exact);
  REQUIRE(c6.size() == 3);
  CHECK(c6[0].density == Rational(2));
  CHECK(c6[1].density == Rational(2));
  CHECK(c6[2].density == Rational(2));

  const Graph grid44 = make_grid(2, 4);
  const auto profile = expansion_profile(grid44, 2, SearchMode::heuristic);
  CHECK(profile[0].density >= Rational(3));  // identity model matches d(G)
  for (size_t i = 0; i + 1 < profile.size(); ++i)
    CHECK(profile[i].density <= profile[i + 1].density);
  for (const auto& entry : profile)
    CHECK(entry.density <= Rational(grid44.vertex_count() - 1));

  for (const char* spec : {"gnp:8:0.4:2", "petersen", "grid:2:3"}) {
    const Graph g = generate(parse_family_spec(spec));
    const auto prof = expansion_profile(g, 3, SearchMode::heuristic);
    for (size_t i = 0; i + 1 < prof.size(); ++i) CHECK(prof[i].density <= prof[i + 1].density);
    for (const auto& entry : prof) CHECK(entry.density <= Rational(g.vertex_count() - 1));
  }
}

TEST_CASE("exact mode refuses past its cap, empty graphs are domain errors") {
  CHECK_THROWS_AS(densest_shallow_minor(make_petersen(), 1, SearchMode::exact), RefusalError);
  CHECK_THROWS_AS(densest_shallow_minor(Graph(0), 1, SearchMode::exact), DomainError);
  CHECK_THROWS_AS(densest_shallow_minor(make_path(3), -1, SearchMode::exact), DomainError);
  CHECK_NOTHROW(densest_shallow_minor(make_petersen(), 1, SearchMode::exact, 10));
}

TEST_CASE("random ball packing models are always valid") {
  SeededRng rng(42);
  for (const char* spec : {"gnp:12:0.3:1", "gnp:16:0.2:2", "grid:2:4", "path:9"}) {
    const Graph g = generate(parse_family_spec(spec));
    for (int r = 0; r <= 2; ++r)
      for (int trial = 0; trial < 5; ++trial) {
        const MinorModel m = random_ball_packing_model(g, r, rng);
        const auto verdict = validate_model(g, m);
        CHECK(verdict.valid);
        // packing covers every vertex
        size_t covered = 0;
        for (const auto& bs : m.branch_sets) covered += bs.size();
        CHECK(covered == static_cast<size_t>(g.vertex_count()));
      }
  }
}

TEST_CASE("minor model serialization round trip") {
  const Graph c6 = make_cycle(6);
  const MinorModel m = c6_triangle_model();
  std::istringstream in(write_minor_model(m));
  const MinorModel back = read_minor_model(in);
  CHECK(back.depth == m.depth);
  CHECK(back.branch_sets == m.branch_sets);
  CHECK(back.centers == m.centers);
  CHECK(back.minor_edges == m.minor_edges);
  CHECK(back.edge_witnesses == m.edge_witnesses);
  CHECK(validate_model(c6, back).valid);
}
