#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparsesep/bounds.hpp"
#include "sparsesep/generators.hpp"
#include "sparsesep/graph.hpp"
#include "sparsesep/minor.hpp"
#include "sparsesep/rational.hpp"

namespace sparsesep {

inline constexpr const char* kCsvSchemaHeader = "# sparse-sep-lab v1 schema=1";

struct LogLogFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double stderr_exponent = 0.0;
};

/// Least squares on (ln x, ln y); x and y must be positive.
LogLogFit least_squares_loglog(const std::vector<double>& xs, const std::vector<double>& ys);

struct GridExperimentRow {
  int dim = 0;
  int side = 0;
  int n = 0;
  int m = 0;
  std::string sep_mode;  // "exact" or "heuristic"
  int sep_order = 0;
  std::vector<Rational> profile;  // densities for r = 0..r_max
};

struct GridExperimentResult {
  std::vector<GridExperimentRow> rows;
  LogLogFit fit;  // separator order vs n
};

/// Separator orders and greedy expansion profiles across grid sides, plus the
/// fitted scaling exponent of separator order against n.
GridExperimentResult grid_experiment(int dim, const std::vector<int>& sides,
                                     std::uint64_t seed, int r_max,
                                     int sep_exact_cap = kSeparatorExactCapDefault);

std::string grid_experiment_csv(const GridExperimentResult& result, int dim,
                                std::uint64_t seed, int r_max, int sep_exact_cap);

struct SurveyRow {
  std::string spec;
  int n = 0;
  int m = 0;
  int r = 0;
  int col = 0;   // heuristic strong coloring value
  int wcol = 0;  // heuristic weak coloring value
  Rational minor_density;  // greedy densest shallow minor
};

/// Per-graph, per-radius coloring values and minor densities. Data only; no
/// claims ride on it.
std::vector<SurveyRow> problem_survey(const std::vector<FamilySpec>& corpus, int r_max);

/// Smallest c1 making eval_expansion_bound dominate every observed density on
/// the surveyed corpus; an empirical fit, not a derived constant.
double fitted_c1(const std::vector<SurveyRow>& rows, const BoundParams& params);

std::string survey_csv(const std::vector<SurveyRow>& rows, int r_max,
                       const BoundParams& params, std::uint64_t seed);

}  // namespace sparsesep
