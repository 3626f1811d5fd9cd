#include "filtdom/cli.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "filtdom/build.hpp"
#include "filtdom/domination.hpp"
#include "filtdom/expand.hpp"
#include "filtdom/io.hpp"
#include "filtdom/oracle.hpp"
#include "filtdom/random.hpp"

namespace filtdom::cli {

namespace {

constexpr const char* kVersion = FILTDOM_VERSION;
constexpr std::size_t kDefaultExpandBudget = 50'000'000;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fixed(double x, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

std::string ms(double millis) { return fixed(millis, 3); }
std::string ms(std::chrono::duration<double> d) { return fixed(d.count() * 1e3, 3); }

std::string percent(std::size_t part, std::size_t whole) {
  return fixed(whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole), 2);
}

// Linux reports ru_maxrss in KiB.
long peak_rss_kib() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

class Report {
 public:
  explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void meta(std::string line) { meta_.push_back(std::move(line)); }
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void write(std::ostream& out, ReportFormat format) const {
    if (format == ReportFormat::kCsv) {
      for (const auto& m : meta_) out << "# " << m << '\n';
      write_line(out, columns_, ",", "", "");
      for (const auto& r : rows_) write_line(out, r, ",", "", "");
    } else {
      for (const auto& m : meta_) out << "<!-- " << m << " -->\n";
      out << '\n';
      write_line(out, columns_, " | ", "| ", " |");
      std::vector<std::string> rule(columns_.size(), "---");
      write_line(out, rule, " | ", "| ", " |");
      for (const auto& r : rows_) write_line(out, r, " | ", "| ", " |");
    }
  }

 private:
  static void write_line(std::ostream& out, const std::vector<std::string>& cells,
                         const char* sep, const char* open, const char* close) {
    out << open;
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? sep : "") << cells[i];
    out << close << '\n';
  }

  std::vector<std::string> columns_;
  std::vector<std::string> meta_;
  std::vector<std::vector<std::string>> rows_;
};

// Flags that don't live in RunConfig.
struct Extras {
  std::string points, distances, edges;
  std::string order = "revlex", mode = "strong", grade_mode = "original", format = "csv";
  // expand
  std::size_t max_dim = 2;
  bool no_collapse = false;
  std::size_t max_simplices = kDefaultExpandBudget;
  // verify
  std::string oracle = "domination";
  std::size_t instances = 0;
  std::size_t max_n = 0;
  std::size_t grid_side = 4;
  std::size_t simplex_budget = oracle::kDefaultSimplexBudget;
  std::string reduced;
  // generate
  std::string emit = "points";
};

std::string input_label(const RunConfig& c) {
  switch (c.input) {
    case InputKind::kPoints: return "points:" + c.input_path;
    case InputKind::kDistances: return "distances:" + c.input_path;
    case InputKind::kEdges: return "edges:" + c.input_path;
    case InputKind::kDataset: return c.dataset + ":" + std::to_string(c.n);
    case InputKind::kNone: break;
  }
  return "none";
}

std::string input_flags(const RunConfig& c) {
  std::string s;
  switch (c.input) {
    case InputKind::kPoints: s = "--points " + c.input_path; break;
    case InputKind::kDistances: s = "--distances " + c.input_path; break;
    case InputKind::kEdges: s = "--edges " + c.input_path; break;
    case InputKind::kDataset: s = "--dataset " + c.dataset + " --n " + std::to_string(c.n); break;
    case InputKind::kNone: break;
  }
  if (!c.densities_path.empty()) s += " --densities " + c.densities_path;
  return s;
}

void add_run_metadata(Report& report, const RunConfig& c, const std::string& replay) {
  report.meta(std::string("filtdom ") + kVersion);
  report.meta("command: " + c.command);
  report.meta("replay: filtdom " + c.command + " " + replay);
  report.meta("seed: " + std::to_string(c.seed));
  report.meta("shuffle: " + std::string(kShuffleAlgorithm));
  report.meta("times: wall-clock milliseconds, input parsing excluded");
}

std::string collapse_replay(const RunConfig& c, bool with_order) {
  std::ostringstream s;
  s << input_flags(c) << " --grade-mode " << to_string(c.grade_mode) << " --mode "
    << to_string(c.mode);
  if (with_order) s << " --order " << to_string(c.order.kind);
  s << " --iterations " << c.iterations << " --seed " << c.seed;
  return s.str();
}

void emit_report(Report& report, const RunConfig& c, std::ostream& out) {
  report.meta("peak_rss_kib (approximate): " + std::to_string(peak_rss_kib()));
  if (c.report.empty()) {
    report.write(out, c.format);
  } else {
    write_file_atomically(c.report, [&](std::ostream& o) { report.write(o, c.format); });
  }
}

void write_edges(const std::string& path, const BifilteredGraph& graph) {
  write_file_atomically(path, [&](std::ostream& o) { write_edge_list(o, graph); });
}

int cmd_collapse(const RunConfig& c, std::ostream& out) {
  const auto graph = load_graph(c);
  const auto result = collapse_iterated(graph, c.order, c.mode, c.iterations);
  const auto& r = result.report;
  if (!c.output.empty()) write_edges(c.output, result.graph);

  Report report({"input", "grade_mode", "mode", "order", "seed", "iteration", "edges_before",
                 "edges_after", "removed_pct", "time_ms"});
  add_run_metadata(report, c, collapse_replay(c, true));
  const auto prefix = [&] {
    return std::vector<std::string>{input_label(c), std::string(to_string(c.grade_mode)),
                                    std::string(to_string(c.mode)),
                                    std::string(to_string(c.order.kind)), std::to_string(c.seed)};
  };
  std::size_t remaining = r.edges_before;
  for (std::size_t i = 0; i < r.removed_per_iteration.size(); ++i) {
    auto cells = prefix();
    const std::size_t after = remaining - r.removed_per_iteration[i];
    // Percentages are relative to the original edge count.
    cells.insert(cells.end(), {std::to_string(i + 1), std::to_string(remaining),
                               std::to_string(after),
                               percent(r.removed_per_iteration[i], r.edges_before),
                               ms(r.wall_time_per_iteration[i])});
    report.row(std::move(cells));
    remaining = after;
  }
  auto total = prefix();
  total.insert(total.end(), {"total", std::to_string(r.edges_before), std::to_string(r.edges_after),
                             percent(r.removed(), r.edges_before), ms(r.total_time())});
  report.row(std::move(total));
  emit_report(report, c, out);
  return kOk;
}

int cmd_bench_orders(const RunConfig& c, std::ostream& out) {
  const auto graph = load_graph(c);
  Report report({"input", "grade_mode", "mode", "order", "seed", "iterations", "edges_before",
                 "edges_after", "removed_pct", "time_ms"});
  add_run_metadata(report, c, collapse_replay(c, false));
  for (OrderKind kind : kAllOrderKinds) {
    const auto r = collapse_iterated(graph, {kind, c.seed}, c.mode, c.iterations).report;
    report.row({input_label(c), std::string(to_string(c.grade_mode)),
                std::string(to_string(c.mode)), std::string(to_string(kind)),
                std::to_string(c.seed), std::to_string(c.iterations),
                std::to_string(r.edges_before), std::to_string(r.edges_after),
                percent(r.removed(), r.edges_before), ms(r.total_time())});
  }
  emit_report(report, c, out);
  return kOk;
}

int cmd_expand(const RunConfig& c, const Extras& x, std::ostream& out) {
  const auto graph = load_graph(c);
  const std::size_t triangles_before = count_triangles(graph);

  BifilteredGraph reduced = graph;
  double removal_ms = 0.0;
  if (!x.no_collapse) {
    const auto result = collapse_iterated(graph, c.order, c.mode, c.iterations);
    reduced = result.graph;
    removal_ms = result.report.total_time().count() * 1e3;
  }
  const std::size_t triangles_after = x.max_dim >= 2 ? count_triangles(reduced) : 0;
  const std::size_t simplices = reduced.num_vertices() + reduced.num_edges() + triangles_after;
  if (simplices > x.max_simplices) throw oracle::BudgetExceeded(simplices, x.max_simplices);

  const auto start = Clock::now();
  std::vector<GradedTriangle> triangles;
  if (x.max_dim >= 2) triangles = enumerate_triangles(reduced);
  write_file_atomically(c.output,
                        [&](std::ostream& o) { export_scc2020(o, reduced, triangles); });
  const double export_ms = ms_since(start);

  Report report({"input", "grade_mode", "mode", "order", "seed", "collapsed", "edges_before",
                 "edges_after", "triangles_before", "triangles_after", "removal_ms",
                 "export_ms"});
  std::string replay = collapse_replay(c, true) + " --max-dim " + std::to_string(x.max_dim) +
                       " --output " + c.output;
  if (x.no_collapse) replay += " --no-collapse";
  add_run_metadata(report, c, replay);
  report.row({input_label(c), std::string(to_string(c.grade_mode)), std::string(to_string(c.mode)),
              std::string(to_string(c.order.kind)), std::to_string(c.seed),
              x.no_collapse ? "no" : "yes", std::to_string(graph.num_edges()),
              std::to_string(reduced.num_edges()), std::to_string(triangles_before),
              std::to_string(triangles_after), ms(removal_ms), ms(export_ms)});
  emit_report(report, c, out);
  return kOk;
}

int cmd_verify(const RunConfig& c, const Extras& x, std::ostream& out, std::ostream& err) {
  const bool homology = x.oracle == "homology";
  const auto start = Clock::now();
  AuditResult result;
  std::string source;
  std::string replay;
  std::size_t instances = 0;

  if (c.input == InputKind::kEdges) {
    auto graph_in = open_input(c.input_path);
    const auto graph = read_edge_list(graph_in);
    source = c.input_path;
    instances = 1;
    replay = "--edges " + c.input_path;
    if (!x.reduced.empty()) {
      auto in = open_input(x.reduced);
      const auto reduced = read_edge_list(in);
      const auto report = oracle::verify_collapse(graph, reduced, x.simplex_budget);
      result.graphs = 1;
      result.checks = report.grades_checked;
      if (!report.equal) {
        result.failures = 1;
        result.first_failure = "reduced graph differs: " + report.first_discrepancy;
        result.counterexample = graph;
      }
      source += " vs " + x.reduced;
      replay += " --reduced " + x.reduced + " --oracle homology";
    } else if (homology) {
      audit_homology(graph, c.seed, result);
      replay += " --oracle homology --seed " + std::to_string(c.seed);
    } else {
      audit_domination(graph, result);
      replay += " --oracle domination";
    }
  } else {
    CorpusParams corpus;
    corpus.instances = x.instances ? x.instances : (homology ? 50 : 200);
    corpus.max_n = x.max_n ? x.max_n : (homology ? 8 : 10);
    corpus.grid_side = x.grid_side;
    corpus.seed = c.seed;
    result = homology ? audit_homology(corpus) : audit_domination(corpus);
    source = "random";
    instances = corpus.instances;
    replay = "--oracle " + x.oracle + " --instances " + std::to_string(corpus.instances) +
             " --max-n " + std::to_string(corpus.max_n) + " --grid-side " +
             std::to_string(corpus.grid_side) + " --seed " + std::to_string(c.seed);
  }

  const std::string oracle_name = x.reduced.empty() ? x.oracle : "homology";
  Report report({"oracle", "source", "instances", "seed", "checks", "failures",
                 "strong_not_full", "time_ms"});
  add_run_metadata(report, c, replay);
  report.row({oracle_name, source, std::to_string(instances), std::to_string(c.seed),
              std::to_string(result.checks), std::to_string(result.failures),
              std::to_string(result.strong_not_full), ms(ms_since(start))});
  if (result.failures > 0) {
    const std::string path = c.output.empty() ? "counterexample.txt" : c.output;
    if (result.counterexample) write_edges(path, *result.counterexample);
    report.meta("first failure: " + result.first_failure);
    report.meta("counterexample: " + path);
    err << "verify: " << result.first_failure << " (graph written to " << path << ")\n";
  }
  emit_report(report, c, out);
  return result.failures == 0 ? kOk : kCheckFailed;
}

int cmd_generate(const RunConfig& c, const Extras& x, std::ostream& out) {
  const auto write = [&](auto&& writer) {
    if (c.output.empty()) {
      writer(out);
    } else {
      write_file_atomically(c.output, writer);
    }
  };
  if (x.emit == "points") {
    if (c.input != InputKind::kDataset) throw UsageError("--emit points needs --dataset");
    const auto points = generate_dataset(c.dataset, c.n, c.seed);
    write([&](std::ostream& o) { write_points(o, points); });
  } else {
    const auto graph = load_graph(c);
    write([&](std::ostream& o) { write_edge_list(o, graph); });
  }
  return kOk;
}

void add_input_flags(CLI::App& sub, RunConfig& c, Extras& x, bool with_densities) {
  sub.add_option("--points", x.points, "point cloud file, one point per line");
  sub.add_option("--distances", x.distances, "lower-triangular distance matrix file");
  sub.add_option("--edges", x.edges, "bifiltered edge list file");
  sub.add_option("--dataset", c.dataset, "generated dataset")
      ->check(CLI::IsMember({"sphere", "uniform", "circle", "torus", "swiss-roll"}));
  sub.add_option("--n", c.n, "number of generated points");
  if (with_densities) {
    sub.add_option("--densities", c.densities_path,
                   "per-point density values (default: Gaussian KDE)");
  }
}

void add_collapse_flags(CLI::App& sub, RunConfig& c, Extras& x, bool with_order) {
  if (with_order) {
    sub.add_option("--order", x.order, "edge order")
        ->check(CLI::IsMember({"lex", "colex", "revlex", "revcolex", "random"}));
  }
  sub.add_option("--mode", x.mode, "removal predicate")->check(CLI::IsMember({"strong", "full"}));
  sub.add_option("--iterations", c.iterations, "number of greedy passes")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  sub.add_option("--grade-mode", x.grade_mode, "first-coordinate transformation")
      ->check(CLI::IsMember({"original", "zeroed", "random", "drop"}));
}

void add_report_flags(CLI::App& sub, RunConfig& c, Extras& x) {
  sub.add_option("--format", x.format, "report format")->check(CLI::IsMember({"csv", "markdown"}));
  sub.add_option("--report", c.report, "report file (default: standard output)");
}

void resolve_input(RunConfig& c, const Extras& x, bool required) {
  int sources = 0;
  if (!x.points.empty()) c.input = InputKind::kPoints, c.input_path = x.points, ++sources;
  if (!x.distances.empty()) c.input = InputKind::kDistances, c.input_path = x.distances, ++sources;
  if (!x.edges.empty()) c.input = InputKind::kEdges, c.input_path = x.edges, ++sources;
  if (!c.dataset.empty()) c.input = InputKind::kDataset, ++sources;
  if (sources > 1) throw UsageError("give exactly one of --points, --distances, --edges, --dataset");
  if (sources == 0 && required) {
    throw UsageError("an input is required: --points, --distances, --edges or --dataset");
  }
  if (c.input == InputKind::kDataset && c.n < 2) throw UsageError("--dataset needs --n >= 2");
  if (c.input != InputKind::kDataset && c.n != 0) throw UsageError("--n only applies to --dataset");
  if (!c.densities_path.empty() && c.input == InputKind::kEdges) {
    throw UsageError("--densities does not apply to --edges");
  }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compress bifiltered graphs by removing filtration-dominated edges", "filtdom"};
  app.set_version_flag("--version", std::string("filtdom ") + kVersion);
  app.require_subcommand(1);

  RunConfig c;
  Extras x;

  auto* collapse = app.add_subcommand("collapse", "remove dominated edges and report the result");
  add_input_flags(*collapse, c, x, true);
  add_collapse_flags(*collapse, c, x, true);
  collapse->add_option("--seed", c.seed, "seed for datasets, random orders and random grades");
  collapse->add_option("--output", c.output, "write the reduced edge list here");
  add_report_flags(*collapse, c, x);

  auto* bench = app.add_subcommand("bench-orders", "one collapse per edge order");
  add_input_flags(*bench, c, x, true);
  add_collapse_flags(*bench, c, x, false);
  bench->add_option("--seed", c.seed, "seed for datasets, random orders and random grades");
  add_report_flags(*bench, c, x);

  auto* expand = app.add_subcommand("expand", "export the clique bifiltration");
  add_input_flags(*expand, c, x, true);
  add_collapse_flags(*expand, c, x, true);
  expand->add_option("--seed", c.seed, "seed for datasets, random orders and random grades");
  expand->add_option("--output", c.output, "scc2020 output file")->required();
  expand->add_option("--max-dim", x.max_dim, "highest simplex dimension")
      ->check(CLI::Range(std::size_t{1}, std::size_t{2}));
  expand->add_flag("--no-collapse", x.no_collapse, "export without removing edges");
  expand->add_option("--max-simplices", x.max_simplices, "abort above this many simplices");
  // The export is always scc2020, so --format scc2020 is accepted and only
  // csv/markdown change anything (the report).
  expand->add_option("--format", x.format, "report format; scc2020 names the export")
      ->check(CLI::IsMember({"csv", "markdown", "scc2020"}));
  expand->add_option("--report", c.report, "report file (default: standard output)");

  auto* verify = app.add_subcommand("verify", "check against brute-force oracles");
  verify->add_option("--oracle", x.oracle, "which oracle")
      ->check(CLI::IsMember({"domination", "homology"}));
  verify->add_option("--instances", x.instances, "random graphs (default 200, or 50 for homology)");
  verify->add_option("--max-n", x.max_n, "largest vertex count (default 10, or 8 for homology)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  verify->add_option("--grid-side", x.grid_side, "grades are drawn from this square grid")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  verify->add_option("--edges", x.edges, "check this graph instead of a random corpus");
  verify->add_option("--reduced", x.reduced, "compare --edges with this reduced graph");
  verify->add_option("--simplex-budget", x.simplex_budget, "homology oracle size limit");
  verify->add_option("--seed", c.seed, "corpus seed");
  verify->add_option("--output", c.output, "counterexample file (default counterexample.txt)");
  add_report_flags(*verify, c, x);

  auto* generate = app.add_subcommand("generate", "write a dataset or its edge list");
  add_input_flags(*generate, c, x, true);
  generate->add_option("--grade-mode", x.grade_mode, "first-coordinate transformation")
      ->check(CLI::IsMember({"original", "zeroed", "random", "drop"}));
  generate->add_option("--emit", x.emit, "points or edges")->check(CLI::IsMember({"points", "edges"}));
  generate->add_option("--seed", c.seed, "dataset and random-grade seed");
  generate->add_option("--output", c.output, "output file (default: standard output)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  c.command = sub->get_name();
  c.order.kind = *parse_order_kind(x.order);
  c.order.seed = c.seed;
  c.mode = *parse_collapse_mode(x.mode);
  c.grade_mode = *parse_grade_mode(x.grade_mode);
  c.format = x.format == "markdown" ? ReportFormat::kMarkdown : ReportFormat::kCsv;

  if (c.command == "verify") {
    if (!x.reduced.empty() && x.edges.empty()) throw UsageError("--reduced needs --edges");
    if (!x.edges.empty() && (x.instances || x.max_n)) {
      throw UsageError("--instances and --max-n apply to the random corpus only");
    }
    resolve_input(c, x, false);
    return cmd_verify(c, x, out, err);
  }
  resolve_input(c, x, true);
  if (c.command == "collapse") return cmd_collapse(c, out);
  if (c.command == "bench-orders") return cmd_bench_orders(c, out);
  if (c.command == "expand") return cmd_expand(c, x, out);
  return cmd_generate(c, x, out);
}

}  // namespace

BifilteredGraph load_graph(const RunConfig& c) {
  BifilteredGraph graph;
  if (c.input == InputKind::kEdges) {
    auto in = open_input(c.input_path);
    graph = read_edge_list(in);
  } else {
    CondensedDistances distances;
    if (c.input == InputKind::kDataset) {
      distances = pairwise_distances(generate_dataset(c.dataset, c.n, c.seed));
    } else if (c.input == InputKind::kPoints) {
      auto in = open_input(c.input_path);
      distances = pairwise_distances(read_points(in));
    } else if (c.input == InputKind::kDistances) {
      auto in = open_input(c.input_path);
      distances = read_lower_distance_matrix(in);
    } else {
      throw std::invalid_argument("no input given");
    }
    if (c.densities_path.empty()) {
      graph = density_rips_graph(distances);
    } else {
      auto in = open_input(c.densities_path);
      const auto densities = read_values(in);
      if (densities.size() != distances.num_points) {
        throw ParseError(c.densities_path + ": expected " + std::to_string(distances.num_points) +
                         " densities, found " + std::to_string(densities.size()));
      }
      graph = density_rips_graph(distances, densities);
    }
  }
  return apply_grade_mode(graph, c.grade_mode, c.seed);
}

BifilteredGraph corpus_graph(const CorpusParams& corpus, std::size_t index) {
  Rng rng(corpus.seed * 0x9E3779B97F4A7C15ULL + index);
  const std::size_t n = 2 + uniform_below(rng, corpus.max_n - 1);
  const double p = uniform(rng, 0.3, 0.9);
  return oracle::random_graph(n, p, corpus.grid_side, rng());
}

void audit_domination(const BifilteredGraph& graph, AuditResult& result) {
  ++result.graphs;
  const auto fail = [&](const std::string& what) {
    if (result.failures++ == 0) {
      result.first_failure = what;
      result.counterexample = graph;
    }
  };
  for (const Edge& e : graph.edges()) {
    std::ostringstream name;
    name << "edge (" << e.u << ", " << e.v << ")";
    const bool full = is_filtration_dominated(graph, e);
    const auto strong = is_strongly_dominated(graph, e);
    bool brute_strong = false;
    for (Vertex v = 0; v < graph.num_vertices() && !brute_strong; ++v) {
      if (v != e.u && v != e.v) brute_strong = oracle::brute_force_strongly_dominated_by(graph, e, v);
    }
    result.checks += 2;
    if (full != oracle::brute_force_filtration_dominated(graph, e)) {
      fail(name.str() + ": filtration domination disagrees with brute force");
    }
    if (strong.has_value() != brute_strong) {
      fail(name.str() + ": strong domination disagrees with brute force");
    } else if (strong && !oracle::brute_force_strongly_dominated_by(graph, e, *strong)) {
      fail(name.str() + ": reported strong dominator " + std::to_string(*strong) + " fails");
    }
    if (strong && !full) {
      ++result.strong_not_full;
      fail(name.str() + ": strongly but not filtration dominated");
    }
  }
}

AuditResult audit_domination(const CorpusParams& corpus) {
  AuditResult result;
  for (std::size_t i = 0; i < corpus.instances; ++i) audit_domination(corpus_graph(corpus, i), result);
  return result;
}

void audit_homology(const BifilteredGraph& graph, std::uint64_t order_seed, AuditResult& result) {
  ++result.graphs;
  for (CollapseMode mode : {CollapseMode::kStrong, CollapseMode::kFull}) {
    for (OrderKind kind : kAllOrderKinds) {
      const auto reduced = collapse_once(graph, {kind, order_seed}, mode).graph;
      const auto report = oracle::verify_collapse(graph, reduced);
      ++result.checks;
      if (!report.equal && result.failures++ == 0) {
        result.first_failure = std::string(to_string(mode)) + " collapse in " +
                               std::string(to_string(kind)) +
                               " order changed homology: " + report.first_discrepancy;
        result.counterexample = graph;
      }
    }
  }
}

AuditResult audit_homology(const CorpusParams& corpus) {
  AuditResult result;
  for (std::size_t i = 0; i < corpus.instances; ++i) {
    audit_homology(corpus_graph(corpus, i), corpus.seed + i, result);
  }
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for more information.\n";
    return kUsage;
  } catch (const oracle::BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + std::max(argc, 1));
  return run(args, out, err);
}

}  // namespace filtdom::cli
