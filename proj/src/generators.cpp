#include "sparsesep/generators.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "sparsesep/errors.hpp"
#include "sparsesep/rng.hpp"

namespace sparsesep {

Graph make_path(int n) {
  if (n < 1) throw DomainError("path: need n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw DomainError("cycle: need n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph make_clique(int n) {
  if (n < 1) throw DomainError("clique: need n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph make_star(int leaves) {
  if (leaves < 1) throw DomainError("star: need at least one leaf");
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

namespace {

long long grid_size(int dim, int side) {
  long long n = 1;
  for (int i = 0; i < dim; ++i) {
    n *= side;
    if (n > 100'000'000) throw DomainError("grid: too many vertices");
  }
  return n;
}

// Vertex id = sum of coord[i] * side^i; edges join tuples differing by one in
// a single coordinate.
std::vector<Edge> grid_edges(int dim, int side) {
  const long long n = grid_size(dim, side);
  std::vector<Edge> edges;
  long long stride = 1;
  for (int i = 0; i < dim; ++i) {
    for (long long v = 0; v < n; ++v) {
      const long long coord = (v / stride) % side;
      if (coord + 1 < side) edges.emplace_back(static_cast<int>(v), static_cast<int>(v + stride));
    }
    stride *= side;
  }
  return edges;
}

}  // namespace

Graph make_grid(int dim, int side) {
  if (dim < 1 || side < 1) throw DomainError("grid: need dim >= 1 and side >= 1");
  return Graph(static_cast<int>(grid_size(dim, side)), grid_edges(dim, side));
}

Graph make_petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph(10, edges);
}

Graph make_gnp(int n, double p, std::uint64_t seed) {
  if (n < 1) throw DomainError("gnp: need n >= 1");
  if (p < 0.0 || p > 1.0) throw DomainError("gnp: need p in [0,1]");
  SeededRng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform_real() < p) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph make_grid_subgraph(int dim, int side, double keep_prob, std::uint64_t seed) {
  if (dim < 1 || side < 1) throw DomainError("grid_subgraph: need dim >= 1 and side >= 1");
  if (keep_prob < 0.0 || keep_prob > 1.0)
    throw DomainError("grid_subgraph: need keep_prob in [0,1]");
  // Keeps every vertex of the full grid and each edge independently with
  // probability keep_prob, in the grid's canonical edge order.
  std::vector<Edge> all = grid_edges(dim, side);
  std::sort(all.begin(), all.end());
  SeededRng rng(seed);
  std::vector<Edge> kept;
  for (const Edge& e : all)
    if (rng.uniform_real() < keep_prob) kept.push_back(e);
  return Graph(static_cast<int>(grid_size(dim, side)), kept);
}

namespace {

std::vector<std::string> split_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ':')) parts.push_back(cur);
  return parts;
}

int parse_int(const std::string& s, const std::string& ctx) {
  try {
    size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw DomainError("");
    return v;
  } catch (const std::exception&) {
    throw DomainError("family spec: bad integer '" + s + "' in " + ctx);
  }
}

double parse_double(const std::string& s, const std::string& ctx) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw DomainError("");
    return v;
  } catch (const std::exception&) {
    throw DomainError("family spec: bad number '" + s + "' in " + ctx);
  }
}

std::uint64_t parse_seed(const std::string& s, const std::string& ctx) {
  try {
    size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw DomainError("");
    return v;
  } catch (const std::exception&) {
    throw DomainError("family spec: bad seed '" + s + "' in " + ctx);
  }
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
  const auto parts = split_spec(text);
  if (parts.empty()) throw DomainError("empty family spec");
  FamilySpec spec;
  spec.text = text;
  const std::string& name = parts[0];
  const size_t argc = parts.size() - 1;
  auto need = [&](size_t lo, size_t hi) {
    if (argc < lo || argc > hi)
      throw DomainError("family spec '" + text + "': wrong number of parameters");
  };
  if (name == "path" || name == "cycle" || name == "clique" || name == "star") {
    need(1, 1);
    spec.family = name == "path"    ? GraphFamily::path
                  : name == "cycle" ? GraphFamily::cycle
                  : name == "clique" ? GraphFamily::clique
                                     : GraphFamily::star;
    spec.n = parse_int(parts[1], text);
  } else if (name == "grid") {
    need(2, 2);
    spec.family = GraphFamily::grid;
    spec.dim = parse_int(parts[1], text);
    spec.side = parse_int(parts[2], text);
  } else if (name == "petersen") {
    need(0, 0);
    spec.family = GraphFamily::petersen;
  } else if (name == "gnp") {
    need(2, 3);
    spec.family = GraphFamily::gnp;
    spec.n = parse_int(parts[1], text);
    spec.p = parse_double(parts[2], text);
    spec.seed = argc == 3 ? parse_seed(parts[3], text) : 0;
  } else if (name == "grid_subgraph") {
    need(3, 4);
    spec.family = GraphFamily::grid_subgraph;
    spec.dim = parse_int(parts[1], text);
    spec.side = parse_int(parts[2], text);
    spec.p = parse_double(parts[3], text);
    spec.seed = argc == 4 ? parse_seed(parts[4], text) : 0;
  } else {
    throw DomainError("unknown graph family '" + name + "'");
  }
  return spec;
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case GraphFamily::path: return make_path(spec.n);
    case GraphFamily::cycle: return make_cycle(spec.n);
    case GraphFamily::clique: return make_clique(spec.n);
    case GraphFamily::star: return make_star(spec.n);
    case GraphFamily::grid: return make_grid(spec.dim, spec.side);
    case GraphFamily::petersen: return make_petersen();
    case GraphFamily::gnp: return make_gnp(spec.n, spec.p, spec.seed);
    case GraphFamily::grid_subgraph:
      return make_grid_subgraph(spec.dim, spec.side, spec.p, spec.seed);
  }
  throw InternalError("unhandled graph family");
}

}  // namespace sparsesep
