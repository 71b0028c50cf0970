#include "sparsesep/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "sparsesep/errors.hpp"

namespace sparsesep {

namespace {

bool blank_or_comment(const std::string& line, char comment) {
  for (char c : line) {
    if (c == comment) return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    if (blank_or_comment(line, '#')) continue;
    std::istringstream row(line);
    if (n < 0) {
      if (!(row >> n >> m) || n < 0 || m < 0)
        throw DomainError("edge list: malformed header line '" + line + "'");
      continue;
    }
    long long u, v;
    if (!(row >> u >> v)) throw DomainError("edge list: malformed edge line '" + line + "'");
    if (u >= v) throw DomainError("edge list: expected u < v on line '" + line + "'");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw DomainError("edge list: missing header line");
  if (static_cast<long long>(edges.size()) != m)
    throw DomainError("edge list: header promises " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream row(line);
    std::string tag;
    row >> tag;
    if (tag == "p") {
      std::string kind;
      if (!(row >> kind >> n >> m) || kind != "edge" || n < 0 || m < 0)
        throw DomainError("dimacs: malformed problem line '" + line + "'");
    } else if (tag == "e") {
      if (n < 0) throw DomainError("dimacs: edge before problem line");
      long long u, v;
      if (!(row >> u >> v)) throw DomainError("dimacs: malformed edge line '" + line + "'");
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
    } else if (!tag.empty()) {
      throw DomainError("dimacs: unexpected line '" + line + "'");
    }
  }
  if (n < 0) throw DomainError("dimacs: missing problem line");
  return Graph(static_cast<int>(n), edges);
}

Graph read_graph_auto(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::istringstream scan(text);
  std::string line;
  bool dimacs = false;
  while (std::getline(scan, line)) {
    if (blank_or_comment(line, '#')) continue;
    dimacs = line[0] == 'p' || line[0] == 'c' || line[0] == 'e';
    break;
  }
  std::istringstream replay(text);
  return dimacs ? read_dimacs(replay) : read_edge_list(replay);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open graph file: " + path);
  return read_graph_auto(in);
}

}  // namespace sparsesep
