#pragma once

#include <string>
#include <vector>

#include "sparsesep/graph.hpp"
#include "sparsesep/minor.hpp"
#include "sparsesep/rational.hpp"

namespace sparsesep {

// Parameters of the expansion bound f(r) = c1 (r+1)^{1/delta}
// ((1/delta) log2(r+3))^{c2/delta} and of the chain inequalities.
struct BoundParams {
  double delta = 0.5;
  double C = 1.0;
  double c1 = 1.0;
  double c2 = 1.0;
  double alpha = 1.0;
  double beta = 1.0;

  void validate() const;
};

/// f(r), logs base 2. Monotone nondecreasing in r for any valid parameters.
double eval_expansion_bound(const BoundParams& p, long long r);

// Concrete instance of the separator-to-expansion inequality chain: a shallow
// minor F of the host, a dense well-expanding subgraph H of F, a max-degree-3
// subgraph H' of H, and the trimmed host subgraph G' that contracts to H'.
struct ChainCertificate {
  Graph host;
  int depth = 0;             // r
  MinorModel model;          // model of F on the host
  VertexSet h_vertices;      // minor ids forming H (induced in F)
  std::vector<Edge> h_prime_edges;  // subset of H's edges, max degree 3
  MinorModel trimmed_model;  // branch sets trimmed to reach H' witnesses; G'
                             // is its host subgraph
};

struct ChainMeasurements {
  Rational d_f;        // average degree of F
  Rational d_h;        // average degree of H
  int n_h = 0;         // |V(H)|
  int tw_h = -1;       // treewidth of H
  int n_h_prime = 0;   // |V(H')|
  int n_g_prime = 0;   // |V(G')|
  int tw_g_prime = -1; // treewidth of G'
};

enum class StepStatus { pass, fail, not_applicable };

struct StepVerdict {
  std::string step;  // "a".."e"
  StepStatus status = StepStatus::not_applicable;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string note;
};

struct ChainReport {
  ChainMeasurements measurements;
  std::vector<StepVerdict> verdicts;

  bool all_passed() const {
    for (const auto& v : verdicts)
      if (v.status == StepStatus::fail) return false;
    return true;
  }
};

// Below this H size the treewidth lower bound of step (b) is outside its
// derivation's regime and is reported not-applicable (sides still shown).
inline constexpr long long kStepBSizeFloor = 99609375;  // ceil((255/256) * 1e8)

/// Validates every component of the certificate (CertificationError on the
/// first failure, naming the component) and evaluates the five chain
/// inequalities. Integer and rational sides compare exactly; sides involving
/// logs or fractional powers get the documented relative slack.
ChainReport check_chain(const ChainCertificate& cert, const BoundParams& p);

/// Assembles a certificate from a graph: densest-minor model (exact when
/// small), expander subgraph of the contraction, a max-degree-3 subgraph
/// (exhaustive when small, greedy otherwise), and trimmed branch sets.
ChainCertificate build_chain_certificate(const Graph& g, int r);

}  // namespace sparsesep
