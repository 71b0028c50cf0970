// Command-line front end. Verbs: gen, sep, tw, minor, colnum, expander,
// chain-check, grid-exp, survey. The primary artifact of a verb goes to --out
// (or stdout without it); a short summary goes to stdout (or stderr when the
// artifact occupies stdout). Exit codes: 0 success, 1 verification failure,
// 2 input/size refusal, 3 internal invariant violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sparsesep/bounds.hpp"
#include "sparsesep/errors.hpp"
#include "sparsesep/expander.hpp"
#include "sparsesep/experiments.hpp"
#include "sparsesep/generators.hpp"
#include "sparsesep/graph_io.hpp"
#include "sparsesep/minor.hpp"
#include "sparsesep/orders.hpp"
#include "sparsesep/separator.hpp"
#include "sparsesep/treewidth.hpp"

namespace {

using namespace sparsesep;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitRefusal = 2;
constexpr int kExitInternal = 3;

struct CommonOpts {
  std::string in_file;
  std::string spec;
  std::string out_file;
  std::string format = "text";
  std::uint64_t seed = 0;
  int exact_cap = 0;  // 0 = verb default
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool takes_graph) {
  if (takes_graph) {
    cmd->add_option("--in", opts.in_file, "read the graph from a file");
    cmd->add_option("--spec", opts.spec, "generate the graph from a family spec");
  }
  cmd->add_option("--out", opts.out_file, "write the artifact to a file");
  cmd->add_option("--format", opts.format, "summary format")
      ->check(CLI::IsMember({"text", "csv"}));
  cmd->add_option("--seed", opts.seed, "seed for randomized steps");
  cmd->add_option("--exact-cap", opts.exact_cap, "override the verb's exact-mode size cap");
}

Graph input_graph(const CommonOpts& opts) {
  if (!opts.in_file.empty() && !opts.spec.empty())
    throw DomainError("give either --in or --spec, not both");
  if (!opts.in_file.empty()) return load_graph_file(opts.in_file);
  if (!opts.spec.empty()) return generate(parse_family_spec(opts.spec));
  throw DomainError("need a graph: --in FILE or --spec FAMILY");
}

// artifact -> --out file (stdout without --out); summary -> the other stream.
void emit(const CommonOpts& opts, const std::string& artifact, const std::string& summary) {
  if (opts.out_file.empty()) {
    std::cout << artifact;
    if (!summary.empty()) std::cerr << summary;
  } else {
    std::ofstream out(opts.out_file, std::ios::binary);
    if (!out) throw DomainError("cannot open output file: " + opts.out_file);
    out << artifact;
    if (!summary.empty()) std::cout << summary;
  }
}

std::string summarize(const CommonOpts& opts,
                      const std::vector<std::pair<std::string, std::string>>& kv) {
  std::ostringstream out;
  if (opts.format == "csv") {
    for (size_t i = 0; i < kv.size(); ++i) out << (i ? "," : "") << kv[i].first;
    out << '\n';
    for (size_t i = 0; i < kv.size(); ++i) out << (i ? "," : "") << kv[i].second;
    out << '\n';
  } else {
    for (size_t i = 0; i < kv.size(); ++i) out << (i ? " " : "") << kv[i].first << '=' << kv[i].second;
    out << '\n';
  }
  return out.str();
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

int run_gen(const CommonOpts& opts) {
  if (opts.spec.empty()) throw DomainError("gen: need --spec FAMILY");
  const Graph g = generate(parse_family_spec(opts.spec));
  emit(opts, write_edge_list(g),
       summarize(opts, {{"n", std::to_string(g.vertex_count())},
                        {"m", std::to_string(g.edge_count())}}));
  return kExitOk;
}

int run_sep(const CommonOpts& opts, const std::string& mode, const std::string& check_file) {
  const Graph g = input_graph(opts);
  if (!check_file.empty()) {
    std::ifstream in(check_file);
    if (!in) throw DomainError("cannot open separator file: " + check_file);
    const Separator sep = read_separator(in);
    const SeparatorVerdict verdict = validate_separator(g, sep);
    const char* status = verdict.status == SeparatorStatus::valid_balanced ? "valid_balanced"
                         : verdict.status == SeparatorStatus::valid_unbalanced
                             ? "valid_unbalanced"
                             : "invalid";
    emit(opts, "",
         summarize(opts, {{"status", status},
                          {"order", std::to_string(verdict.order)},
                          {"reason", verdict.reason.empty() ? "-" : verdict.reason}}));
    return verdict.status == SeparatorStatus::valid_balanced ? kExitOk
                                                             : kExitVerificationFailure;
  }
  const int cap = opts.exact_cap > 0 ? opts.exact_cap : kSeparatorExactCapDefault;
  const Separator sep = min_balanced_separator(
      g, mode == "exact" ? SearchMode::exact : SearchMode::heuristic, cap);
  emit(opts, write_separator(sep),
       summarize(opts, {{"mode", mode},
                        {"order", std::to_string(separator_order(sep))},
                        {"balanced", "yes"}}));
  return kExitOk;
}

int run_tw(const CommonOpts& opts, const std::string& check_file) {
  const Graph g = input_graph(opts);
  if (!check_file.empty()) {
    std::ifstream in(check_file);
    if (!in) throw DomainError("cannot open decomposition file: " + check_file);
    const TreeDecomposition td = read_tree_decomposition(in);
    const DecompositionVerdict verdict = validate_decomposition(g, td);
    emit(opts, "",
         summarize(opts, {{"valid", verdict.valid ? "yes" : "no"},
                          {"width", std::to_string(verdict.width)},
                          {"reason", verdict.reason.empty() ? "-" : verdict.reason}}));
    return verdict.valid ? kExitOk : kExitVerificationFailure;
  }
  const int cap = opts.exact_cap > 0 ? opts.exact_cap : kTreewidthCapDefault;
  const TreewidthResult result = treewidth_exact(g, cap);
  emit(opts, write_tree_decomposition(result.decomposition, g.vertex_count()),
       summarize(opts, {{"treewidth", std::to_string(result.width)}}));
  return kExitOk;
}

int run_minor(const CommonOpts& opts, const std::string& mode, int r, bool profile, int r_max,
              const std::string& check_file) {
  const Graph g = input_graph(opts);
  if (!check_file.empty()) {
    std::ifstream in(check_file);
    if (!in) throw DomainError("cannot open minor model file: " + check_file);
    const MinorModel m = read_minor_model(in);
    const ModelVerdict verdict = validate_model(g, m);
    emit(opts, "",
         summarize(opts, {{"valid", verdict.valid ? "yes" : "no"},
                          {"reason", verdict.reason.empty() ? "-" : verdict.reason}}));
    return verdict.valid ? kExitOk : kExitVerificationFailure;
  }
  const int cap = opts.exact_cap > 0 ? opts.exact_cap : kDensestExactCapDefault;
  const SearchMode search = mode == "exact" ? SearchMode::exact : SearchMode::heuristic;
  if (profile) {
    std::ostringstream out;
    out << kCsvSchemaHeader << '\n';
    out << "# experiment=profile mode=" << mode << " r_max=" << r_max << '\n';
    out << "r,density\n";
    for (const auto& entry : expansion_profile(g, r_max, search, cap))
      out << entry.radius << ',' << to_string(entry.density) << '\n';
    emit(opts, out.str(), "");
    return kExitOk;
  }
  const DensestMinor result = densest_shallow_minor(g, r, search, cap);
  std::ostringstream artifact;
  artifact << "# density " << to_string(result.density) << '\n'
           << write_minor_model(result.model);
  emit(opts, artifact.str(),
       summarize(opts, {{"mode", mode},
                        {"r", std::to_string(r)},
                        {"density", to_string(result.density)}}));
  return kExitOk;
}

int run_colnum(const CommonOpts& opts, const std::string& mode, int r, const std::string& kind,
               const std::string& order_file) {
  const Graph g = input_graph(opts);
  const ReachKind reach = kind == "weak" ? ReachKind::weak : ReachKind::strong;
  LinearOrder order;
  int value = 0;
  if (!order_file.empty()) {
    std::ifstream in(order_file);
    if (!in) throw DomainError("cannot open order file: " + order_file);
    order = read_order(in);
    value = coloring_number(g, order, r, reach);
  } else {
    const int cap = opts.exact_cap > 0 ? opts.exact_cap : kBestOrderExactCapDefault;
    const BestOrderResult result = best_order(
        g, r, reach, mode == "exact" ? SearchMode::exact : SearchMode::heuristic, cap);
    order = result.order;
    value = result.value;
  }
  emit(opts, write_order(order),
       summarize(opts, {{"kind", kind}, {"r", std::to_string(r)},
                        {"value", std::to_string(value)}}));
  return kExitOk;
}

int run_expander(const CommonOpts& opts, const std::string& mode) {
  const Graph g = input_graph(opts);
  const int cap = opts.exact_cap > 0 ? opts.exact_cap : kExpanderExactCapDefault;
  const ExpansionCertificate cert = expander_subgraph(
      g, mode == "exact" ? SearchMode::exact : SearchMode::heuristic, cap, opts.seed);
  std::ostringstream artifact;
  artifact << "H:";
  for (Vertex v : cert.vertices) artifact << ' ' << v;
  artifact << '\n';
  artifact << "density: " << to_string(cert.density) << '\n';
  artifact << "density_bound: " << to_string(cert.density_bound) << '\n';
  artifact << "tau: " << fmt_double(cert.tau) << '\n';
  artifact << "exact: " << (cert.exact ? "yes" : "no") << '\n';
  if (cert.has_worst_set) {
    artifact << "worst_set:";
    for (Vertex v : cert.worst_set) artifact << ' ' << v;
    artifact << '\n';
    artifact << "worst_ratio: " << to_string(cert.worst_ratio) << '\n';
  }
  emit(opts, artifact.str(),
       summarize(opts, {{"size", std::to_string(cert.vertices.size())},
                        {"density", to_string(cert.density)},
                        {"exact", cert.exact ? "yes" : "no"}}));
  return kExitOk;
}

int run_chain_check(const CommonOpts& opts, int r, const BoundParams& params) {
  const Graph g = input_graph(opts);
  const ChainCertificate cert = build_chain_certificate(g, r);
  const ChainReport report = check_chain(cert, params);
  std::ostringstream artifact;
  const auto& ms = report.measurements;
  artifact << "# r=" << r << " d_F=" << to_string(ms.d_f) << " d_H=" << to_string(ms.d_h)
           << " n_H=" << ms.n_h << " tw_H=" << ms.tw_h << " n_Hprime=" << ms.n_h_prime
           << " n_Gprime=" << ms.n_g_prime << " tw_Gprime=" << ms.tw_g_prime << '\n';
  for (const auto& v : report.verdicts) {
    const char* status = v.status == StepStatus::pass            ? "pass"
                         : v.status == StepStatus::fail          ? "fail"
                                                                 : "not_applicable";
    artifact << "step=" << v.step << " status=" << status << " lhs=" << fmt_double(v.lhs)
             << " rhs=" << fmt_double(v.rhs) << " # " << v.note << '\n';
  }
  emit(opts, artifact.str(),
       summarize(opts, {{"steps", std::to_string(report.verdicts.size())},
                        {"result", report.all_passed() ? "pass" : "fail"}}));
  return report.all_passed() ? kExitOk : kExitVerificationFailure;
}

int run_grid_exp(const CommonOpts& opts, int dim, const std::string& sides_arg, int r_max) {
  std::vector<int> sides;
  std::stringstream ss(sides_arg);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) sides.push_back(std::stoi(item));
  const int cap = opts.exact_cap > 0 ? opts.exact_cap : kSeparatorExactCapDefault;
  const GridExperimentResult result = grid_experiment(dim, sides, opts.seed, r_max, cap);
  emit(opts, grid_experiment_csv(result, dim, opts.seed, r_max, cap),
       summarize(opts, {{"rows", std::to_string(result.rows.size())},
                        {"fit_exponent", fmt_double(result.fit.exponent)}}));
  return kExitOk;
}

int run_survey(const CommonOpts& opts, const std::string& corpus_arg, int r_max,
               const BoundParams& params) {
  std::vector<FamilySpec> corpus;
  std::stringstream ss(corpus_arg);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) corpus.push_back(parse_family_spec(item));
  if (corpus.empty()) throw DomainError("survey: empty corpus");
  const std::vector<SurveyRow> rows = problem_survey(corpus, r_max);
  emit(opts, survey_csv(rows, r_max, params, opts.seed),
       summarize(opts, {{"rows", std::to_string(rows.size())}}));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sparse-sep-lab: balanced separators, treewidth, shallow minors, coloring "
               "numbers, expander subgraphs, and inequality-chain certificates at desk scale"};
  app.require_subcommand(1);

  CommonOpts gen_opts;
  auto* gen = app.add_subcommand("gen", "generate a graph and write its edge list");
  gen->add_option("--spec", gen_opts.spec, "family spec, e.g. grid:2:3 or gnp:10:0.5:7")
      ->required();
  add_common(gen, gen_opts, false);

  CommonOpts sep_opts;
  std::string sep_mode = "exact", sep_check;
  auto* sep = app.add_subcommand("sep", "minimum (or heuristic) balanced separator");
  add_common(sep, sep_opts, true);
  sep->add_option("--mode", sep_mode, "exact or heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  sep->add_option("--check", sep_check, "validate a separator certificate file instead");

  CommonOpts tw_opts;
  std::string tw_check;
  auto* tw = app.add_subcommand("tw", "exact treewidth with a witnessing decomposition");
  add_common(tw, tw_opts, true);
  tw->add_option("--check", tw_check, "validate a decomposition file instead");

  CommonOpts minor_opts;
  std::string minor_mode = "greedy", minor_check;
  int minor_r = 1, minor_r_max = 2;
  bool minor_profile = false;
  auto* minor = app.add_subcommand("minor", "densest shallow minor or expansion profile");
  add_common(minor, minor_opts, true);
  minor->add_option("--mode", minor_mode, "exact or greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));
  minor->add_option("--r", minor_r, "minor depth");
  minor->add_flag("--profile", minor_profile, "emit the expansion profile as CSV");
  minor->add_option("--r-max", minor_r_max, "profile depth range");
  minor->add_option("--check", minor_check, "validate a minor model file instead");

  CommonOpts col_opts;
  std::string col_mode = "heuristic", col_kind = "strong", col_order_file;
  int col_r = 1;
  auto* colnum = app.add_subcommand("colnum", "coloring number and a witnessing order");
  add_common(colnum, col_opts, true);
  colnum->add_option("--mode", col_mode, "exact or heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));
  colnum->add_option("--kind", col_kind, "strong or weak")
      ->check(CLI::IsMember({"strong", "weak"}));
  colnum->add_option("--r", col_r, "reach radius");
  colnum->add_option("--order", col_order_file, "evaluate this order file instead of searching");

  CommonOpts exp_opts;
  std::string exp_mode = "exact";
  auto* expander = app.add_subcommand("expander", "dense well-expanding induced subgraph");
  add_common(expander, exp_opts, true);
  expander->add_option("--mode", exp_mode, "exact or heuristic")
      ->check(CLI::IsMember({"exact", "heuristic"}));

  CommonOpts chain_opts;
  int chain_r = 1;
  BoundParams chain_params;
  auto* chain = app.add_subcommand("chain-check", "build and verify an inequality-chain certificate");
  add_common(chain, chain_opts, true);
  chain->add_option("--r", chain_r, "minor depth");
  chain->add_option("--delta", chain_params.delta, "separator exponent parameter");
  chain->add_option("--C", chain_params.C, "separator constant");
  chain->add_option("--c1", chain_params.c1, "bound constant c1");
  chain->add_option("--c2", chain_params.c2, "bound constant c2");
  chain->add_option("--alpha", chain_params.alpha, "sparsifier constant alpha");
  chain->add_option("--beta", chain_params.beta, "sparsifier constant beta");

  CommonOpts grid_opts;
  int grid_dim = 2, grid_r_max = 2;
  std::string grid_sides = "3,4,5,6";
  auto* grid = app.add_subcommand("grid-exp", "separator scaling experiment on grids");
  add_common(grid, grid_opts, false);
  grid->add_option("--d", grid_dim, "grid dimension");
  grid->add_option("--sides", grid_sides, "comma-separated side lengths");
  grid->add_option("--r-max", grid_r_max, "expansion profile depth");

  CommonOpts survey_opts;
  int survey_r_max = 2;
  std::string survey_corpus;
  BoundParams survey_params;
  auto* survey = app.add_subcommand("survey", "coloring numbers and minor densities over a corpus");
  add_common(survey, survey_opts, false);
  survey->add_option("--corpus", survey_corpus, "comma-separated family specs")->required();
  survey->add_option("--r-max", survey_r_max, "radius range");
  survey->add_option("--delta", survey_params.delta, "delta for the fitted c1");
  survey->add_option("--c2", survey_params.c2, "c2 for the fitted c1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitRefusal;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opts);
    if (sep->parsed()) return run_sep(sep_opts, sep_mode, sep_check);
    if (tw->parsed()) return run_tw(tw_opts, tw_check);
    if (minor->parsed())
      return run_minor(minor_opts, minor_mode, minor_r, minor_profile, minor_r_max, minor_check);
    if (colnum->parsed()) return run_colnum(col_opts, col_mode, col_r, col_kind, col_order_file);
    if (expander->parsed()) return run_expander(exp_opts, exp_mode);
    if (chain->parsed()) return run_chain_check(chain_opts, chain_r, chain_params);
    if (grid->parsed()) return run_grid_exp(grid_opts, grid_dim, grid_sides, grid_r_max);
    if (survey->parsed()) return run_survey(survey_opts, survey_corpus, survey_r_max, survey_params);
  } catch (const CertificationError& e) {
    std::cerr << "certification error: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const RefusalError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kExitRefusal;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitRefusal;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
