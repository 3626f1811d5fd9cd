#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "filtdom/collapse.hpp"
#include "filtdom/graph.hpp"
#include "filtdom/orders.hpp"

namespace filtdom::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,     // verify found a discrepancy
  kInputError = 2,      // unreadable or malformed input
  kBudgetExceeded = 3,  // expand: too many simplices
  kUsage = 64,          // invalid flags
};

enum class InputKind { kNone, kPoints, kDistances, kEdges, kDataset };
enum class ReportFormat { kCsv, kMarkdown };

struct RunConfig {
  std::string command;
  InputKind input = InputKind::kNone;
  std::string input_path;  // points, distances or edges file
  std::string dataset;
  std::size_t n = 0;
  std::string densities_path;  // optional, with points or distances
  GradeMode grade_mode = GradeMode::kOriginal;
  EdgeOrder order;
  CollapseMode mode = CollapseMode::kStrong;
  std::size_t iterations = 1;
  std::uint64_t seed = 0;
  std::string output;
  std::string report;  // stdout when empty
  ReportFormat format = ReportFormat::kCsv;
};

/// Builds the graph described by the input fields of `config` and applies its
/// grade mode. Throws std::runtime_error (or ParseError) on unreadable input.
BifilteredGraph load_graph(const RunConfig& config);

// Seeded corpora of small random graphs for the verify command. Instance i
// has 2..max_n vertices, edge probability in [0.3, 0.9), and integer grades
// on a grid_side x grid_side grid.
struct CorpusParams {
  std::size_t instances = 200;
  std::size_t max_n = 10;
  std::size_t grid_side = 4;
  std::uint64_t seed = 0;
};

BifilteredGraph corpus_graph(const CorpusParams& corpus, std::size_t index);

struct AuditResult {
  std::size_t graphs = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::size_t strong_not_full = 0;  // edges strongly but not fully dominated
  std::optional<BifilteredGraph> counterexample;
  std::string first_failure;
};

/// Compares both domination predicates with the brute-force oracle on every
/// edge of every corpus graph.
AuditResult audit_domination(const CorpusParams& corpus);
void audit_domination(const BifilteredGraph& graph, AuditResult& result);

/// Collapses every corpus graph in both modes and all orders and compares the
/// Betti tables of input and output.
AuditResult audit_homology(const CorpusParams& corpus);
void audit_homology(const BifilteredGraph& graph, std::uint64_t order_seed, AuditResult& result);

/// Parses `args` (without the program name), runs the command, and returns an
/// ExitCode. Reports go to `out` unless --report is given; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace filtdom::cli
