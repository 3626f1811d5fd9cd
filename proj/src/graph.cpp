#include "filtdom/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace filtdom {

namespace {

auto find_neighbor(const std::vector<Neighbor>& list, Vertex id) {
  return std::lower_bound(list.begin(), list.end(), id,
                          [](const Neighbor& nb, Vertex x) { return nb.id < x; });
}

std::string pair_name(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Grade BifilteredGraph::grade_of(Vertex u, Vertex v) const {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return Grade::never();
  const auto& list = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const Vertex other = &list == &adjacency_[u] ? v : u;
  auto it = find_neighbor(list, other);
  if (it == list.end() || it->id != other) return Grade::never();
  return it->grade;
}

void BifilteredGraph::add_edge(Vertex u, Vertex v, const Grade& grade) {
  if (u >= adjacency_.size() || v >= adjacency_.size()) {
    throw std::out_of_range("edge " + pair_name(u, v) + " references a vertex >= " +
                            std::to_string(adjacency_.size()));
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (!grade.is_finite()) {
    throw std::invalid_argument("edge " + pair_name(u, v) + " has a non-finite grade");
  }
  auto& lu = adjacency_[u];
  auto it = find_neighbor(lu, v);
  if (it != lu.end() && it->id == v) {
    throw std::invalid_argument("duplicate edge " + pair_name(std::min(u, v), std::max(u, v)));
  }
  lu.insert(it, Neighbor{v, grade});
  auto& lv = adjacency_[v];
  lv.insert(find_neighbor(lv, u), Neighbor{u, grade});
  ++num_edges_;
}

bool BifilteredGraph::remove_edge(Vertex u, Vertex v) {
  if (u >= adjacency_.size() || v >= adjacency_.size()) return false;
  auto& lu = adjacency_[u];
  auto it = find_neighbor(lu, v);
  if (it == lu.end() || it->id != v) return false;
  lu.erase(it);
  auto& lv = adjacency_[v];
  lv.erase(find_neighbor(lv, u));
  --num_edges_;
  return true;
}

std::vector<Edge> BifilteredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (const auto& nb : adjacency_[u]) {
      if (u < nb.id) out.push_back({u, nb.id, nb.grade});
    }
  }
  return out;
}

bool BifilteredGraph::is_consistent() const {
  std::size_t half_edges = 0;
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    const auto& list = adjacency_[u];
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i > 0 && list[i - 1].id >= list[i].id) return false;
      const Vertex w = list[i].id;
      if (w == u || w >= adjacency_.size()) return false;
      auto it = find_neighbor(adjacency_[w], u);
      if (it == adjacency_[w].end() || it->id != u || !(it->grade == list[i].grade)) return false;
    }
    half_edges += list.size();
  }
  return half_edges == 2 * num_edges_;
}

void BifilteredGraph::transform_grades(
    const std::function<Grade(Vertex, Vertex, const Grade&)>& f) {
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (auto& nb : adjacency_[u]) {
      if (u < nb.id) nb.grade = f(u, nb.id, nb.grade);
    }
  }
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (auto& nb : adjacency_[u]) {
      if (nb.id < u) nb.grade = find_neighbor(adjacency_[nb.id], u)->grade;
    }
  }
}

BifilteredGraph graph_from_edges(std::size_t num_vertices, std::span<const Edge> edges) {
  std::vector<Edge> canonical(edges.begin(), edges.end());
  for (auto& e : canonical) {
    if (e.u >= num_vertices || e.v >= num_vertices) {
      throw std::invalid_argument("edge " + pair_name(e.u, e.v) + " references a vertex >= " +
                                  std::to_string(num_vertices));
    }
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (!e.grade.is_finite()) {
      throw std::invalid_argument("edge " + pair_name(e.u, e.v) + " has a non-finite grade");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(canonical.begin(), canonical.end(),
            [](const Edge& a, const Edge& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
  for (std::size_t i = 1; i < canonical.size(); ++i) {
    if (canonical[i].u == canonical[i - 1].u && canonical[i].v == canonical[i - 1].v) {
      throw std::invalid_argument("duplicate edge " + pair_name(canonical[i].u, canonical[i].v));
    }
  }

  // Inserting in (u, v) order only ever appends to each list.
  BifilteredGraph graph(num_vertices);
  for (const auto& e : canonical) {
    graph.add_edge(e.u, e.v, e.grade);
  }
  return graph;
}

Edge canonical_edge(const BifilteredGraph& graph, const Edge& e) {
  Vertex a = std::min(e.u, e.v);
  Vertex b = std::max(e.u, e.v);
  Grade g = graph.grade_of(a, b);
  if (a == b || g.is_never()) {
    throw std::invalid_argument("edge " + pair_name(e.u, e.v) + " is not in the graph");
  }
  return {a, b, g};
}

std::vector<EdgeNeighbor> edge_neighborhood(const BifilteredGraph& graph, const Edge& e) {
  const Edge edge = canonical_edge(graph, e);
  auto la = graph.neighbors(edge.u);
  auto lb = graph.neighbors(edge.v);
  std::vector<EdgeNeighbor> out;
  std::size_t i = 0, j = 0;
  while (i < la.size() && j < lb.size()) {
    if (la[i].id < lb[j].id) {
      ++i;
    } else if (lb[j].id < la[i].id) {
      ++j;
    } else {
      out.push_back({la[i].id, join(la[i].grade, lb[j].grade, edge.grade)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t SimpleGraph::num_edges() const {
  std::size_t half = 0;
  for (const auto& list : adjacency) half += list.size();
  return half / 2;
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const {
  if (u >= adjacency.size()) return false;
  return std::binary_search(adjacency[u].begin(), adjacency[u].end(), v);
}

SimpleGraph subgraph_at(const BifilteredGraph& graph, const Grade& grade) {
  SimpleGraph out;
  out.adjacency.resize(graph.num_vertices());
  for (Vertex u = 0; u < graph.num_vertices(); ++u) {
    for (const auto& nb : graph.neighbors(u)) {
      if (leq(nb.grade, grade)) out.adjacency[u].push_back(nb.id);
    }
  }
  return out;
}

}  // namespace filtdom
