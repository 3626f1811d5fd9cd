#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "filtdom/grade.hpp"

namespace filtdom {

using Vertex = std::uint32_t;

/// An edge with its unique critical grade. Canonical form has `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Grade grade;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

/// Entry of an adjacency list: the other endpoint and the edge's critical grade.
struct Neighbor {
  Vertex id = 0;
  Grade grade;

  friend constexpr bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// A vertex adjacent to both endpoints of a fixed edge, together with the grade
/// at which it enters the edge neighborhood.
struct EdgeNeighbor {
  Vertex w = 0;
  Grade entry;

  friend constexpr bool operator==(const EdgeNeighbor&, const EdgeNeighbor&) = default;
};

/// One-critical bifiltered graph stored as sorted adjacency lists.
///
/// Every vertex is present at all grades; only edges carry grades. Each list is
/// strictly increasing by neighbor id and the two copies of an edge carry the
/// same grade.
class BifilteredGraph {
 public:
  BifilteredGraph() = default;
  explicit BifilteredGraph(std::size_t num_vertices) : adjacency_(num_vertices) {}

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  /// Critical grade of {u, v}, or `Grade::never()` when the edge is absent.
  Grade grade_of(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return !grade_of(u, v).is_never(); }

  /// Inserts a new edge. Throws std::invalid_argument on a loop, a duplicate
  /// pair or a non-finite grade, and std::out_of_range on a bad id.
  void add_edge(Vertex u, Vertex v, const Grade& grade);

  /// Removes {u, v} in place. Returns false if it was not present.
  bool remove_edge(Vertex u, Vertex v);

  /// All edges in canonical form, sorted by (u, v).
  std::vector<Edge> edges() const;

  /// Sortedness, symmetry and edge-count consistency of the adjacency lists.
  bool is_consistent() const;

  /// Replaces every stored grade by `f(u, v, grade)` (called once per edge,
  /// u < v), keeping both copies in sync.
  void transform_grades(const std::function<Grade(Vertex, Vertex, const Grade&)>& f);

  friend bool operator==(const BifilteredGraph&, const BifilteredGraph&) = default;

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  std::size_t num_edges_ = 0;
};

/// Builds a graph from an edge list. Endpoints may be given in either order.
/// Throws std::invalid_argument naming the offending pair on duplicates or
/// out-of-range ids.
BifilteredGraph graph_from_edges(std::size_t num_vertices, std::span<const Edge> edges);

/// Common neighbors of the endpoints of `e` with their entry grades
/// join(crit(a,w), crit(b,w), crit(e)), sorted by id. Computed by one merged
/// scan of the two adjacency lists. Throws if `e` is not an edge of `graph`.
std::vector<EdgeNeighbor> edge_neighborhood(const BifilteredGraph& graph, const Edge& e);

/// Plain (unfiltered) graph with sorted adjacency lists.
struct SimpleGraph {
  std::vector<std::vector<Vertex>> adjacency;

  std::size_t num_vertices() const { return adjacency.size(); }
  std::size_t num_edges() const;
  bool adjacent(Vertex u, Vertex v) const;
};

/// The subgraph present at `grade`: all vertices and every edge with crit <= grade.
SimpleGraph subgraph_at(const BifilteredGraph& graph, const Grade& grade);

/// Canonical form of an edge (u < v) carrying the graph's stored grade.
/// Throws std::invalid_argument if the pair is not an edge of `graph`.
Edge canonical_edge(const BifilteredGraph& graph, const Edge& e);

}  // namespace filtdom
