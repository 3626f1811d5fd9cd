#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "filtdom/graph.hpp"

namespace filtdom::oracle {

// Brute-force reference implementations for small graphs. Nothing in here
// calls into the domination module.

/// Product of the distinct first and second coordinates of all edge grades.
/// The subgraph is constant on each cell to the upper right of a grid point.
struct CriticalGrid {
  std::vector<double> xs;
  std::vector<double> ys;

  static CriticalGrid of(const BifilteredGraph& graph);

  std::size_t size() const { return xs.size() * ys.size(); }
  Grade at(std::size_t i, std::size_t j) const { return {xs[i], ys[j]}; }
};

/// Whether the edge {a, b} is dominated in a plain graph.
bool dominated_in(const SimpleGraph& graph, Vertex a, Vertex b);

/// Whether `v` dominates {a, b} in a plain graph.
bool dominated_by_in(const SimpleGraph& graph, Vertex a, Vertex b, Vertex v);

/// Literal check of domination at every grid grade above crit(e).
bool brute_force_filtration_dominated(const BifilteredGraph& graph, const Edge& e);

/// Literal check that `v` dominates `e` at every grid grade above crit(e).
bool brute_force_strongly_dominated_by(const BifilteredGraph& graph, const Edge& e, Vertex v);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t needed, std::size_t budget);
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

inline constexpr std::size_t kDefaultSimplexBudget = 20000;
inline constexpr std::size_t kMaxHomologyDim = 2;

/// F2 Betti numbers in dimensions 0..2 of the clique bifiltration at every grid
/// grade, plus ranks of the maps induced by inclusion into the right and upper
/// grid neighbors. Indexing is i * ys.size() + j.
struct BettiTable {
  using PerDim = std::array<std::size_t, kMaxHomologyDim + 1>;

  CriticalGrid grid;
  std::vector<PerDim> betti;
  std::vector<PerDim> rank_right;  // meaningful when i + 1 < xs.size()
  std::vector<PerDim> rank_up;     // meaningful when j + 1 < ys.size()

  std::size_t index(std::size_t i, std::size_t j) const { return i * grid.ys.size() + j; }
};

/// Throws BudgetExceeded if the clique complex up to dimension 3 has more
/// than `simplex_budget` simplices.
BettiTable betti_table(const BifilteredGraph& graph,
                       std::size_t simplex_budget = kDefaultSimplexBudget);

/// Evaluates `graph` on a given grid, using the cliques of `shape` (which must
/// contain every clique of `graph`) as the simplex universe.
BettiTable betti_table_on(const BifilteredGraph& graph, const BifilteredGraph& shape,
                          const CriticalGrid& grid,
                          std::size_t simplex_budget = kDefaultSimplexBudget);

struct VerifyReport {
  bool equal = true;
  std::size_t grades_checked = 0;
  std::string first_discrepancy;  // empty when equal
};

/// Compares the Betti tables and one-step inclusion ranks of `graph` and
/// `reduced` on the critical grid of `graph`. Throws std::invalid_argument if
/// `reduced` is not a subgraph of `graph` with identical grades.
VerifyReport verify_collapse(const BifilteredGraph& graph, const BifilteredGraph& reduced,
                             std::size_t simplex_budget = kDefaultSimplexBudget);

/// Erdős–Rényi graph on `n` vertices with edge probability `p` and integer
/// grades drawn i.i.d. from {0..grid_side-1}^2.
BifilteredGraph random_graph(std::size_t n, double p, std::size_t grid_side, std::uint64_t seed);

}  // namespace filtdom::oracle
