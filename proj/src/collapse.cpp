#include "filtdom/collapse.hpp"

#include <stdexcept>

#include "filtdom/domination.hpp"
#include "filtdom/random.hpp"

namespace filtdom {

std::string_view to_string(CollapseMode mode) {
  return mode == CollapseMode::kStrong ? "strong" : "full";
}

std::optional<CollapseMode> parse_collapse_mode(std::string_view name) {
  if (name == "strong") return CollapseMode::kStrong;
  if (name == "full") return CollapseMode::kFull;
  return std::nullopt;
}

std::string_view to_string(GradeMode mode) {
  switch (mode) {
    case GradeMode::kOriginal: return "original";
    case GradeMode::kZeroedDensity: return "zeroed";
    case GradeMode::kRandomDensity: return "random";
    case GradeMode::kDropDensity: return "drop";
  }
  return "?";
}

std::optional<GradeMode> parse_grade_mode(std::string_view name) {
  for (GradeMode m : {GradeMode::kOriginal, GradeMode::kZeroedDensity, GradeMode::kRandomDensity,
                      GradeMode::kDropDensity}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::chrono::duration<double> CollapseReport::total_time() const {
  std::chrono::duration<double> total{0};
  for (auto t : wall_time_per_iteration) total += t;
  return total;
}

namespace {

std::size_t run_pass(BifilteredGraph& graph, const EdgeOrder& order, CollapseMode mode,
                     std::vector<Edge>& removed_log) {
  std::size_t removed = 0;
  for (const Edge& e : sort_edges(graph.edges(), order)) {
    const bool remove = mode == CollapseMode::kStrong ? is_strongly_dominated(graph, e).has_value()
                                                      : is_filtration_dominated(graph, e);
    if (remove) {
      graph.remove_edge(e.u, e.v);
      removed_log.push_back(e);
      ++removed;
    }
  }
  return removed;
}

}  // namespace

CollapseResult collapse_once(const BifilteredGraph& graph, const EdgeOrder& order,
                             CollapseMode mode) {
  return collapse_iterated(graph, order, mode, 1);
}

CollapseResult collapse_iterated(const BifilteredGraph& graph, const EdgeOrder& order,
                                 CollapseMode mode, std::size_t iterations) {
  if (iterations == 0) throw std::invalid_argument("iteration count must be at least 1");
  CollapseResult result{graph, {}};
  auto& report = result.report;
  report.edges_before = graph.num_edges();
  report.mode = mode;
  report.order = order;
  for (std::size_t k = 0; k < iterations; ++k) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t removed = run_pass(result.graph, order, mode, report.removed_edges);
    report.wall_time_per_iteration.push_back(std::chrono::steady_clock::now() - start);
    report.removed_per_iteration.push_back(removed);
    if (removed == 0) break;
  }
  report.edges_after = result.graph.num_edges();
  return result;
}

BifilteredGraph apply_grade_mode(const BifilteredGraph& graph, GradeMode mode,
                                 std::uint64_t seed) {
  BifilteredGraph out = graph;
  switch (mode) {
    case GradeMode::kOriginal:
      break;
    case GradeMode::kZeroedDensity:
    case GradeMode::kDropDensity:
      out.transform_grades([](Vertex, Vertex, const Grade& g) { return Grade{0.0, g.t}; });
      break;
    case GradeMode::kRandomDensity: {
      // Edges are visited in (u, v) order, so the draw is seed-determined.
      Rng rng(seed);
      out.transform_grades(
          [&](Vertex, Vertex, const Grade& g) { return Grade{uniform01(rng), g.t}; });
      break;
    }
  }
  return out;
}

std::size_t count_free_at_birth(const BifilteredGraph& graph) {
  std::size_t count = 0;
  for (const Edge& e : graph.edges()) {
    if (!is_dominated_at(graph, e, e.grade)) ++count;
  }
  return count;
}

}  // namespace filtdom
