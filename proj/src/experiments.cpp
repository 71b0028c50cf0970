#include "sparsesep/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sparsesep/errors.hpp"
#include "sparsesep/orders.hpp"
#include "sparsesep/separator.hpp"

namespace sparsesep {

namespace {

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

}  // namespace

LogLogFit least_squares_loglog(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2)
    throw DomainError("least_squares_loglog: need at least two points");
  const int m = static_cast<int>(xs.size());
  std::vector<double> lx(m), ly(m);
  for (int i = 0; i < m; ++i) {
    if (xs[i] <= 0 || ys[i] <= 0) throw DomainError("least_squares_loglog: values must be positive");
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  double mx = 0, my = 0;
  for (int i = 0; i < m; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0) throw DomainError("least_squares_loglog: x values are all equal");
  LogLogFit fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  double ss_res = 0;
  for (int i = 0; i < m; ++i) {
    const double resid = ly[i] - (fit.intercept + fit.exponent * lx[i]);
    ss_res += resid * resid;
  }
  fit.stderr_exponent = m > 2 ? std::sqrt(ss_res / (m - 2) / sxx) : 0.0;
  return fit;
}

GridExperimentResult grid_experiment(int dim, const std::vector<int>& sides,
                                     std::uint64_t seed, int r_max, int sep_exact_cap) {
  (void)seed;  // recorded in the CSV header; grid families are deterministic
  if (sides.empty()) throw DomainError("grid_experiment: no sides given");
  if (r_max < 0) throw DomainError("grid_experiment: negative r_max");
  GridExperimentResult result;
  std::vector<double> ns, orders;
  for (int side : sides) {
    const Graph g = make_grid(dim, side);
    GridExperimentRow row;
    row.dim = dim;
    row.side = side;
    row.n = g.vertex_count();
    row.m = g.edge_count();
    const bool exact = g.vertex_count() <= std::min(sep_exact_cap, 64);
    row.sep_mode = exact ? "exact" : "heuristic";
    try {
      const Separator sep = min_balanced_separator(
          g, exact ? SearchMode::exact : SearchMode::heuristic, sep_exact_cap);
      row.sep_order = separator_order(sep);
    } catch (const RefusalError&) {
      // Recorded as an empty cell, never dropped silently.
      row.sep_mode = "refused";
      row.sep_order = -1;
    }
    for (const auto& entry : expansion_profile(g, r_max, SearchMode::heuristic))
      row.profile.push_back(entry.density);
    if (row.sep_order >= 0) {
      ns.push_back(row.n);
      orders.push_back(std::max(1, row.sep_order));
    }
    result.rows.push_back(std::move(row));
  }
  if (ns.size() >= 2) result.fit = least_squares_loglog(ns, orders);
  return result;
}

std::string grid_experiment_csv(const GridExperimentResult& result, int dim,
                                std::uint64_t seed, int r_max, int sep_exact_cap) {
  std::ostringstream out;
  out << kCsvSchemaHeader << '\n';
  out << "# experiment=grid dim=" << dim << " seed=" << seed << " r_max=" << r_max
      << " sep_exact_cap=" << sep_exact_cap << '\n';
  out << "dim,side,n,m,sep_mode,sep_order";
  for (int r = 0; r <= r_max; ++r) out << ",density_r" << r;
  out << '\n';
  for (const auto& row : result.rows) {
    out << row.dim << ',' << row.side << ',' << row.n << ',' << row.m << ',' << row.sep_mode
        << ',';
    if (row.sep_order >= 0) out << row.sep_order;
    for (const auto& d : row.profile) out << ',' << to_string(d);
    out << '\n';
  }
  if (result.rows.size() >= 2) {
    out << "# fit_exponent=" << fmt_double(result.fit.exponent) << '\n';
    out << "# fit_intercept=" << fmt_double(result.fit.intercept) << '\n';
    out << "# fit_stderr=" << fmt_double(result.fit.stderr_exponent) << '\n';
  }
  return out.str();
}

std::vector<SurveyRow> problem_survey(const std::vector<FamilySpec>& corpus, int r_max) {
  if (r_max < 0) throw DomainError("problem_survey: negative r_max");
  std::vector<SurveyRow> rows;
  for (const auto& spec : corpus) {
    const Graph g = generate(spec);
    for (int r = 0; r <= r_max; ++r) {
      SurveyRow row;
      row.spec = spec.text;
      row.n = g.vertex_count();
      row.m = g.edge_count();
      row.r = r;
      row.col = best_order(g, r, ReachKind::strong, SearchMode::heuristic).value;
      row.wcol = best_order(g, r, ReachKind::weak, SearchMode::heuristic).value;
      row.minor_density = densest_shallow_minor(g, r, SearchMode::heuristic).density;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

double fitted_c1(const std::vector<SurveyRow>& rows, const BoundParams& params) {
  BoundParams unit = params;
  unit.c1 = 1.0;
  double best = 0.0;
  for (const auto& row : rows) {
    const double f1 = eval_expansion_bound(unit, row.r);
    if (f1 > 0) best = std::max(best, to_double(row.minor_density) / f1);
  }
  return best;
}

std::string survey_csv(const std::vector<SurveyRow>& rows, int r_max,
                       const BoundParams& params, std::uint64_t seed) {
  std::ostringstream out;
  out << kCsvSchemaHeader << '\n';
  out << "# experiment=survey r_max=" << r_max << " seed=" << seed
      << " delta=" << fmt_double(params.delta) << " c2=" << fmt_double(params.c2) << '\n';
  out << "spec,n,m,r,col,wcol,minor_density\n";
  for (const auto& row : rows)
    out << row.spec << ',' << row.n << ',' << row.m << ',' << row.r << ',' << row.col << ','
        << row.wcol << ',' << to_string(row.minor_density) << '\n';
  out << "# fitted_c1=" << fmt_double(fitted_c1(rows, params))
      << " (empirical fit on this corpus, not a derived constant)\n";
  return out.str();
}

}  // namespace sparsesep
