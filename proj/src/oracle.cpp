#include "filtdom/oracle.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "filtdom/random.hpp"

namespace filtdom::oracle {

CriticalGrid CriticalGrid::of(const BifilteredGraph& graph) {
  CriticalGrid grid;
  for (const Edge& e : graph.edges()) {
    grid.xs.push_back(e.grade.s);
    grid.ys.push_back(e.grade.t);
  }
  for (auto* axis : {&grid.xs, &grid.ys}) {
    std::sort(axis->begin(), axis->end());
    axis->erase(std::unique(axis->begin(), axis->end()), axis->end());
  }
  return grid;
}

bool dominated_by_in(const SimpleGraph& graph, Vertex a, Vertex b, Vertex v) {
  if (!graph.adjacent(a, b) || v == a || v == b) return false;
  if (!graph.adjacent(a, v) || !graph.adjacent(b, v)) return false;
  for (Vertex w = 0; w < graph.num_vertices(); ++w) {
    if (w == a || w == b || w == v) continue;
    if (graph.adjacent(a, w) && graph.adjacent(b, w) && !graph.adjacent(v, w)) return false;
  }
  return true;
}

bool dominated_in(const SimpleGraph& graph, Vertex a, Vertex b) {
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (dominated_by_in(graph, a, b, v)) return true;
  }
  return false;
}

namespace {

template <typename Check>
bool holds_above(const BifilteredGraph& graph, const Edge& e, Check&& check) {
  const Grade crit = graph.grade_of(e.u, e.v);
  if (crit.is_never()) throw std::invalid_argument("edge is not in the graph");
  const auto grid = CriticalGrid::of(graph);
  for (std::size_t i = 0; i < grid.xs.size(); ++i) {
    for (std::size_t j = 0; j < grid.ys.size(); ++j) {
      const Grade g = grid.at(i, j);
      if (!leq(crit, g)) continue;
      if (!check(subgraph_at(graph, g))) return false;
    }
  }
  return true;
}

}  // namespace

bool brute_force_filtration_dominated(const BifilteredGraph& graph, const Edge& e) {
  return holds_above(graph, e, [&](const SimpleGraph& g) { return dominated_in(g, e.u, e.v); });
}

bool brute_force_strongly_dominated_by(const BifilteredGraph& graph, const Edge& e, Vertex v) {
  return holds_above(graph, e,
                     [&](const SimpleGraph& g) { return dominated_by_in(g, e.u, e.v, v); });
}

BudgetExceeded::BudgetExceeded(std::size_t needed, std::size_t budget)
    : std::runtime_error("clique complex has " + std::to_string(needed) +
                         " simplices, over the budget of " + std::to_string(budget)),
      budget_(budget) {}

namespace {

// Dense F2 vector.
class BitVector {
 public:
  explicit BitVector(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  void add(const BitVector& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  }
  std::optional<std::size_t> highest() const {
    for (std::size_t k = words_.size(); k-- > 0;) {
      if (words_[k] != 0) return k * 64 + (63 - static_cast<std::size_t>(__builtin_clzll(words_[k])));
    }
    return std::nullopt;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Reduced basis of a subspace, keyed by pivot (highest set bit).
class Basis {
 public:
  bool insert(BitVector v) {
    while (auto top = v.highest()) {
      auto it = pivots_.find(*top);
      if (it == pivots_.end()) {
        pivots_.emplace(*top, std::move(v));
        return true;
      }
      v.add(it->second);
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::unordered_map<std::size_t, BitVector> pivots_;
};

// Cliques of size 1..4 of the shape graph, with facets as indices into the
// previous dimension.
struct CliqueComplex {
  std::array<std::vector<std::vector<Vertex>>, kMaxHomologyDim + 2> simplices;
  std::array<std::vector<std::vector<std::size_t>>, kMaxHomologyDim + 2> facets;
};

CliqueComplex clique_complex(const BifilteredGraph& shape, std::size_t budget) {
  CliqueComplex cx;
  const std::size_t n = shape.num_vertices();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : shape.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;

  for (Vertex v = 0; v < n; ++v) cx.simplices[0].push_back({v});
  for (std::size_t d = 1; d < cx.simplices.size(); ++d) {
    for (const auto& base : cx.simplices[d - 1]) {
      for (Vertex x = base.back() + 1; x < n; ++x) {
        bool ok = true;
        for (Vertex y : base) ok = ok && adj[y][x];
        if (!ok) continue;
        auto s = base;
        s.push_back(x);
        cx.simplices[d].push_back(std::move(s));
      }
    }
    std::sort(cx.simplices[d].begin(), cx.simplices[d].end());
  }
  std::size_t total = 0;
  for (const auto& level : cx.simplices) total += level.size();
  if (total > budget) throw BudgetExceeded(total, budget);

  for (std::size_t d = 1; d < cx.simplices.size(); ++d) {
    const auto& lower = cx.simplices[d - 1];
    for (const auto& s : cx.simplices[d]) {
      std::vector<std::size_t> f;
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<Vertex> face;
        for (std::size_t k = 0; k < s.size(); ++k) {
          if (k != drop) face.push_back(s[k]);
        }
        f.push_back(static_cast<std::size_t>(
            std::lower_bound(lower.begin(), lower.end(), face) - lower.begin()));
      }
      cx.facets[d].push_back(std::move(f));
    }
  }
  return cx;
}

// Grade of each simplex in `graph` (never if some edge is missing there).
std::array<std::vector<Grade>, kMaxHomologyDim + 2> simplex_grades(const CliqueComplex& cx,
                                                                   const BifilteredGraph& graph) {
  std::array<std::vector<Grade>, kMaxHomologyDim + 2> out;
  for (std::size_t d = 0; d < cx.simplices.size(); ++d) {
    for (const auto& s : cx.simplices[d]) {
      Grade g{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
      if (s.size() == 1) {
        out[d].push_back(g);
        continue;
      }
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) g = join(g, graph.grade_of(s[i], s[j]));
      }
      out[d].push_back(g);
    }
  }
  return out;
}

struct GradeHomology {
  std::array<std::size_t, kMaxHomologyDim + 1> betti{};
  std::array<std::vector<BitVector>, kMaxHomologyDim + 1> cycles;
};

BitVector boundary_vector(const CliqueComplex& cx, std::size_t d, std::size_t index) {
  BitVector v(cx.simplices[d - 1].size());
  for (std::size_t f : cx.facets[d][index]) v.flip(f);
  return v;
}

// Basis of the boundaries B_p at grade g: images of active (p+1)-simplices.
Basis boundary_basis(const CliqueComplex& cx,
                     const std::array<std::vector<Grade>, kMaxHomologyDim + 2>& grades,
                     std::size_t p, const Grade& g) {
  Basis basis;
  for (std::size_t k = 0; k < cx.simplices[p + 1].size(); ++k) {
    if (leq(grades[p + 1][k], g)) basis.insert(boundary_vector(cx, p + 1, k));
  }
  return basis;
}

GradeHomology homology_at(const CliqueComplex& cx,
                          const std::array<std::vector<Grade>, kMaxHomologyDim + 2>& grades,
                          const Grade& g) {
  GradeHomology h;
  std::array<std::size_t, kMaxHomologyDim + 2> boundary_rank{};
  for (std::size_t p = 0; p <= kMaxHomologyDim + 1; ++p) {
    const std::size_t dim = cx.simplices[p].size();
    if (p == 0) {
      for (std::size_t k = 0; k < dim; ++k) {
        if (!leq(grades[0][k], g)) continue;
        if (p <= kMaxHomologyDim) {
          BitVector unit(dim);
          unit.flip(k);
          h.cycles[0].push_back(std::move(unit));
        }
      }
      continue;
    }
    // Column reduction tracking which chains reduce to zero (the cycles).
    std::unordered_map<std::size_t, std::pair<BitVector, BitVector>> pivots;
    for (std::size_t k = 0; k < dim; ++k) {
      if (!leq(grades[p][k], g)) continue;
      BitVector col = boundary_vector(cx, p, k);
      BitVector chain(dim);
      chain.flip(k);
      while (auto top = col.highest()) {
        auto it = pivots.find(*top);
        if (it == pivots.end()) break;
        col.add(it->second.first);
        chain.add(it->second.second);
      }
      if (auto top = col.highest()) {
        pivots.emplace(*top, std::make_pair(std::move(col), std::move(chain)));
      } else if (p <= kMaxHomologyDim) {
        h.cycles[p].push_back(std::move(chain));
      }
    }
    boundary_rank[p] = pivots.size();
  }
  for (std::size_t p = 0; p <= kMaxHomologyDim; ++p) {
    h.betti[p] = h.cycles[p].size() - boundary_rank[p + 1];
  }
  return h;
}

std::size_t map_rank(const CliqueComplex& cx,
                     const std::array<std::vector<Grade>, kMaxHomologyDim + 2>& grades,
                     const GradeHomology& from, std::size_t p, const Grade& to) {
  Basis basis = boundary_basis(cx, grades, p, to);
  const std::size_t base = basis.rank();
  for (const auto& z : from.cycles[p]) basis.insert(z);
  return basis.rank() - base;
}

}  // namespace

BettiTable betti_table_on(const BifilteredGraph& graph, const BifilteredGraph& shape,
                          const CriticalGrid& grid, std::size_t simplex_budget) {
  const CliqueComplex cx = clique_complex(shape, simplex_budget);
  const auto grades = simplex_grades(cx, graph);
  BettiTable table;
  table.grid = grid;
  const std::size_t nx = grid.xs.size(), ny = grid.ys.size();
  table.betti.resize(nx * ny);
  table.rank_right.assign(nx * ny, {});
  table.rank_up.assign(nx * ny, {});
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const auto h = homology_at(cx, grades, grid.at(i, j));
      const std::size_t idx = table.index(i, j);
      table.betti[idx] = h.betti;
      for (std::size_t p = 0; p <= kMaxHomologyDim; ++p) {
        if (i + 1 < nx) table.rank_right[idx][p] = map_rank(cx, grades, h, p, grid.at(i + 1, j));
        if (j + 1 < ny) table.rank_up[idx][p] = map_rank(cx, grades, h, p, grid.at(i, j + 1));
      }
    }
  }
  return table;
}

BettiTable betti_table(const BifilteredGraph& graph, std::size_t simplex_budget) {
  return betti_table_on(graph, graph, CriticalGrid::of(graph), simplex_budget);
}

VerifyReport verify_collapse(const BifilteredGraph& graph, const BifilteredGraph& reduced,
                             std::size_t simplex_budget) {
  if (reduced.num_vertices() != graph.num_vertices()) {
    throw std::invalid_argument("reduced graph has a different vertex count");
  }
  for (const Edge& e : reduced.edges()) {
    if (!(graph.grade_of(e.u, e.v) == e.grade)) {
      std::ostringstream msg;
      msg << "reduced edge (" << e.u << ", " << e.v << ") at " << e.grade
          << " is not an edge of the original graph with that grade";
      throw std::invalid_argument(msg.str());
    }
  }
  const auto grid = CriticalGrid::of(graph);
  const auto lhs = betti_table_on(graph, graph, grid, simplex_budget);
  const auto rhs = betti_table_on(reduced, graph, grid, simplex_budget);

  VerifyReport report;
  report.grades_checked = grid.size();
  auto note = [&](std::size_t i, std::size_t j, const char* what, std::size_t p, std::size_t a,
                  std::size_t b) {
    if (!report.equal) return;
    report.equal = false;
    std::ostringstream msg;
    msg << what << " in dimension " << p << " at grade " << grid.at(i, j) << ": " << a
        << " (original) vs " << b << " (reduced)";
    report.first_discrepancy = msg.str();
  };
  for (std::size_t i = 0; i < grid.xs.size(); ++i) {
    for (std::size_t j = 0; j < grid.ys.size(); ++j) {
      const std::size_t idx = lhs.index(i, j);
      for (std::size_t p = 0; p <= kMaxHomologyDim; ++p) {
        if (lhs.betti[idx][p] != rhs.betti[idx][p]) {
          note(i, j, "Betti number", p, lhs.betti[idx][p], rhs.betti[idx][p]);
        }
        if (lhs.rank_right[idx][p] != rhs.rank_right[idx][p]) {
          note(i, j, "rank to right neighbor", p, lhs.rank_right[idx][p], rhs.rank_right[idx][p]);
        }
        if (lhs.rank_up[idx][p] != rhs.rank_up[idx][p]) {
          note(i, j, "rank to upper neighbor", p, lhs.rank_up[idx][p], rhs.rank_up[idx][p]);
        }
      }
    }
  }
  return report;
}

BifilteredGraph random_graph(std::size_t n, double p, std::size_t grid_side, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform01(rng) >= p) continue;
      const auto s = static_cast<double>(uniform_below(rng, grid_side));
      const auto t = static_cast<double>(uniform_below(rng, grid_side));
      edges.push_back({u, v, {s, t}});
    }
  }
  return graph_from_edges(n, edges);
}

}  // namespace filtdom::oracle
