#pragma once

#include <vector>

#include "filtdom/graph.hpp"

namespace filtdom::testing {

// Vertex names of the six-vertex fixture.
enum Fix6 : Vertex { A = 0, B = 1, V = 2, W = 3, X = 4, Y = 5 };

// Dominated at every grade, but by v at the bottom and right and by w at the
// top; no single vertex works everywhere. The pair {v, y} is not an edge.
inline BifilteredGraph fix6() {
  const std::vector<Edge> edges = {
      {A, B, {0, 0}}, {A, V, {0, 0}}, {B, V, {0, 0}}, {A, W, {0, 0}}, {B, W, {0, 0}},
      {V, W, {0, 0}}, {A, X, {2, 0}}, {B, X, {2, 0}}, {V, X, {2, 0}}, {A, Y, {0, 2}},
      {B, Y, {0, 2}}, {W, Y, {0, 2}}, {W, X, {2, 2}}, {X, Y, {2, 2}},
  };
  return graph_from_edges(6, edges);
}

inline BifilteredGraph triangle(Grade a = {0, 0}, Grade b = {0, 0}, Grade c = {0, 0}) {
  const std::vector<Edge> edges = {{0, 1, a}, {0, 2, b}, {1, 2, c}};
  return graph_from_edges(3, edges);
}

inline BifilteredGraph path3() {
  const std::vector<Edge> edges = {{0, 1, {0, 0}}, {1, 2, {0, 0}}};
  return graph_from_edges(3, edges);
}

inline BifilteredGraph four_cycle() {
  const std::vector<Edge> edges = {{0, 1, {0, 0}}, {1, 2, {0, 0}}, {2, 3, {0, 0}}, {0, 3, {0, 0}}};
  return graph_from_edges(4, edges);
}

// Edge (0,1) at (0,0) with neighbors 2 and 3 entering at (0,0), and {2,3} absent.
inline BifilteredGraph two_unlinked_neighbors() {
  const std::vector<Edge> edges = {
      {0, 1, {0, 0}}, {0, 2, {0, 0}}, {1, 2, {0, 0}}, {0, 3, {0, 0}}, {1, 3, {0, 0}}};
  return graph_from_edges(4, edges);
}

}  // namespace filtdom::testing
