#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "filtdom/graph.hpp"

namespace filtdom {

/// A 3-clique u < v < w entering at the join of its three edge grades.
struct GradedTriangle {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;
  Grade grade;

  friend constexpr bool operator==(const GradedTriangle&, const GradedTriangle&) = default;
};

/// Every triangle once, sorted by (u, v, w), found by intersecting the sorted
/// adjacency lists of each edge's endpoints.
std::vector<GradedTriangle> enumerate_triangles(const BifilteredGraph& graph);

/// Same count as enumerate_triangles().size() without storing the triangles.
std::size_t count_triangles(const BifilteredGraph& graph);

/// Writes the clique bifiltration up to dimension 2 in scc2020 text form:
///
///   scc2020
///   2
///   <#triangles> <#edges> <#vertices>
///   s t ; i j k      one per triangle, indices into the edge block
///   s t ; a b        one per edge (sorted by (u, v)), indices into the vertex block
///   0 0 ;            one per vertex
///
/// Grades are translated so the coordinate-wise minimum edge grade becomes
/// (0, 0), where all vertices sit. Throws std::invalid_argument if a triangle
/// uses a pair that is not an edge.
void export_scc2020(std::ostream& out, const BifilteredGraph& graph,
                    const std::vector<GradedTriangle>& triangles);

/// Parsed scc2020 chain complex; blocks are listed from the highest dimension.
struct Scc2020 {
  struct Generator {
    std::vector<double> grade;
    std::vector<std::size_t> boundary;
  };
  std::size_t num_parameters = 0;
  std::vector<std::vector<Generator>> blocks;
};

/// Reads the subset of scc2020 written by export_scc2020 (comments starting
/// with '#' allowed). Throws ParseError on malformed input or out-of-range
/// boundary indices.
Scc2020 read_scc2020(std::istream& in);

}  // namespace filtdom
