#include "filtdom/expand.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "filtdom/io.hpp"

namespace filtdom {

namespace {

template <typename Visit>
void for_each_triangle(const BifilteredGraph& graph, Visit&& visit) {
  for (Vertex u = 0; u < graph.num_vertices(); ++u) {
    auto lu = graph.neighbors(u);
    for (std::size_t k = 0; k < lu.size(); ++k) {
      const Vertex v = lu[k].id;
      if (v <= u) continue;
      auto lv = graph.neighbors(v);
      std::size_t i = k + 1;
      std::size_t j = static_cast<std::size_t>(
          std::upper_bound(lv.begin(), lv.end(), v,
                           [](Vertex x, const Neighbor& nb) { return x < nb.id; }) -
          lv.begin());
      while (i < lu.size() && j < lv.size()) {
        if (lu[i].id < lv[j].id) {
          ++i;
        } else if (lv[j].id < lu[i].id) {
          ++j;
        } else {
          visit(u, v, lu[i].id, join(lu[k].grade, lu[i].grade, lv[j].grade));
          ++i;
          ++j;
        }
      }
    }
  }
}

}  // namespace

std::vector<GradedTriangle> enumerate_triangles(const BifilteredGraph& graph) {
  std::vector<GradedTriangle> out;
  for_each_triangle(graph, [&](Vertex u, Vertex v, Vertex w, const Grade& g) {
    out.push_back({u, v, w, g});
  });
  return out;
}

std::size_t count_triangles(const BifilteredGraph& graph) {
  std::size_t count = 0;
  for_each_triangle(graph, [&](Vertex, Vertex, Vertex, const Grade&) { ++count; });
  return count;
}

void export_scc2020(std::ostream& out, const BifilteredGraph& graph,
                    const std::vector<GradedTriangle>& triangles) {
  const auto edges = graph.edges();
  Grade shift{0.0, 0.0};
  if (!edges.empty()) {
    shift = edges.front().grade;
    for (const Edge& e : edges) {
      shift.s = std::min(shift.s, e.grade.s);
      shift.t = std::min(shift.t, e.grade.t);
    }
  }
  auto edge_index = [&](Vertex a, Vertex b) {
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{a, b},
                               [](const Edge& e, const std::pair<Vertex, Vertex>& key) {
                                 return std::pair{e.u, e.v} < key;
                               });
    if (it == edges.end() || it->u != a || it->v != b) {
      throw std::invalid_argument("triangle uses missing edge (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ")");
    }
    return static_cast<std::size_t>(it - edges.begin());
  };
  auto grade_text = [&](const Grade& g) {
    return format_double(g.s - shift.s) + ' ' + format_double(g.t - shift.t);
  };

  out << "scc2020\n2\n"
      << triangles.size() << ' ' << edges.size() << ' ' << graph.num_vertices() << '\n';
  for (const auto& tri : triangles) {
    std::array<Vertex, 3> vs{tri.u, tri.v, tri.w};
    std::sort(vs.begin(), vs.end());
    out << grade_text(tri.grade) << " ; " << edge_index(vs[0], vs[1]) << ' '
        << edge_index(vs[0], vs[2]) << ' ' << edge_index(vs[1], vs[2]) << '\n';
  }
  for (const Edge& e : edges) out << grade_text(e.grade) << " ; " << e.u << ' ' << e.v << '\n';
  for (std::size_t v = 0; v < graph.num_vertices(); ++v) out << "0 0 ;\n";
}

Scc2020 read_scc2020(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first != std::string::npos && line[first] != '#') return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("scc2020 line " + std::to_string(line_no) + ": " + what);
  };

  if (!next_line() || line.substr(0, 7) != "scc2020") throw fail("missing 'scc2020' tag");
  Scc2020 out;
  if (!next_line()) throw fail("missing parameter count");
  {
    std::istringstream ss(line);
    if (!(ss >> out.num_parameters) || out.num_parameters == 0) throw fail("bad parameter count");
  }
  if (!next_line()) throw fail("missing block sizes");
  std::vector<std::size_t> sizes;
  {
    std::istringstream ss(line);
    std::size_t k;
    while (ss >> k) sizes.push_back(k);
    if (sizes.empty() || !ss.eof()) throw fail("bad block sizes");
  }
  out.blocks.resize(sizes.size());
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    const std::size_t next_size = b + 1 < sizes.size() ? sizes[b + 1] : 0;
    for (std::size_t k = 0; k < sizes[b]; ++k) {
      if (!next_line()) throw fail("unexpected end of file");
      const auto semi = line.find(';');
      if (semi == std::string::npos) throw fail("missing ';'");
      Scc2020::Generator gen;
      std::istringstream grade(line.substr(0, semi));
      double x;
      while (grade >> x) gen.grade.push_back(x);
      if (gen.grade.size() != out.num_parameters || !grade.eof()) throw fail("bad grade");
      std::istringstream boundary(line.substr(semi + 1));
      std::size_t idx;
      while (boundary >> idx) {
        if (idx >= next_size) throw fail("boundary index out of range");
        gen.boundary.push_back(idx);
      }
      if (!boundary.eof()) throw fail("bad boundary");
      out.blocks[b].push_back(std::move(gen));
    }
  }
  if (next_line()) throw fail("trailing content");
  return out;
}

}  // namespace filtdom
