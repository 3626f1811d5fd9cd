#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "filtdom/graph.hpp"
#include "filtdom/orders.hpp"

namespace filtdom {

/// Which removal predicate the greedy pass uses.
enum class CollapseMode { kStrong, kFull };

std::string_view to_string(CollapseMode mode);
std::optional<CollapseMode> parse_collapse_mode(std::string_view name);

struct CollapseReport {
  std::size_t edges_before = 0;
  std::size_t edges_after = 0;
  std::vector<std::size_t> removed_per_iteration;
  std::vector<std::chrono::duration<double>> wall_time_per_iteration;
  CollapseMode mode = CollapseMode::kStrong;
  EdgeOrder order;
  /// Every removed edge, in removal order across all iterations.
  std::vector<Edge> removed_edges;

  std::size_t removed() const { return edges_before - edges_after; }
  double removed_fraction() const {
    return edges_before == 0 ? 0.0 : static_cast<double>(removed()) / edges_before;
  }
  std::chrono::duration<double> total_time() const;
};

struct CollapseResult {
  BifilteredGraph graph;
  CollapseReport report;
};

/// One greedy pass: every edge of `graph` is examined once, in `order`,
/// against the already reduced graph, and removed if the predicate of `mode`
/// holds.
CollapseResult collapse_once(const BifilteredGraph& graph, const EdgeOrder& order,
                             CollapseMode mode);

/// Up to `iterations` passes, each re-sorting the surviving edges. Stops early
/// after a pass that removes nothing. Throws std::invalid_argument if
/// `iterations` is 0.
CollapseResult collapse_iterated(const BifilteredGraph& graph, const EdgeOrder& order,
                                 CollapseMode mode, std::size_t iterations);

/// Transformations of the first grade coordinate used to probe how much the
/// removal depends on the grade structure.
enum class GradeMode {
  kOriginal,
  kZeroedDensity,
  kRandomDensity,  // independent uniform value in [0, 1) per edge
  kDropDensity,    // single-parameter stand-in; same grades as kZeroedDensity
};

std::string_view to_string(GradeMode mode);
std::optional<GradeMode> parse_grade_mode(std::string_view name);

BifilteredGraph apply_grade_mode(const BifilteredGraph& graph, GradeMode mode,
                                 std::uint64_t seed = 0);

/// Number of edges not dominated in the subgraph at their own critical grade.
std::size_t count_free_at_birth(const BifilteredGraph& graph);

}  // namespace filtdom
