#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "filtdom/oracle.hpp"
#include "filtdom/orders.hpp"

using namespace filtdom;

namespace {

std::vector<Grade> grades_of(const std::vector<Edge>& edges) {
  std::vector<Grade> out;
  for (const auto& e : edges) out.push_back(e.grade);
  return out;
}

bool edge_less(const Edge& a, const Edge& b) {
  return std::tie(a.u, a.v, a.grade.s, a.grade.t) < std::tie(b.u, b.v, b.grade.s, b.grade.t);
}

}  // namespace

TEST_CASE("order examples") {
  const std::vector<Edge> edges = {{0, 1, {1, 2}}, {0, 2, {2, 1}}, {1, 2, {1, 1}}};
  CHECK(grades_of(sort_edges(edges, {OrderKind::kLexicographic})) ==
        std::vector<Grade>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(grades_of(sort_edges(edges, {OrderKind::kColexicographic})) ==
        std::vector<Grade>{{1, 1}, {2, 1}, {1, 2}});
  CHECK(grades_of(sort_edges(edges, {OrderKind::kReverseLexicographic})) ==
        std::vector<Grade>{{2, 1}, {1, 2}, {1, 1}});
  CHECK(grades_of(sort_edges(edges, {OrderKind::kReverseColexicographic})) ==
        std::vector<Grade>{{1, 2}, {2, 1}, {1, 1}});
}

TEST_CASE("ties are broken by endpoints") {
  const std::vector<Edge> edges = {{1, 2, {0, 0}}, {0, 2, {0, 0}}, {0, 1, {0, 0}}};
  auto lex = sort_edges(edges, {OrderKind::kLexicographic});
  CHECK(lex == std::vector<Edge>{{0, 1, {0, 0}}, {0, 2, {0, 0}}, {1, 2, {0, 0}}});
  auto rev = sort_edges(edges, {OrderKind::kReverseLexicographic});
  CHECK(rev == std::vector<Edge>{{1, 2, {0, 0}}, {0, 2, {0, 0}}, {0, 1, {0, 0}}});
}

TEST_CASE("orders are permutations and reverse kinds are exact reversals") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto edges = oracle::random_graph(12, 0.5, 3, seed).edges();
    auto sorted_input = edges;
    std::sort(sorted_input.begin(), sorted_input.end(), edge_less);
    for (OrderKind kind : kAllOrderKinds) {
      auto out = sort_edges(edges, {kind, seed});
      std::sort(out.begin(), out.end(), edge_less);
      CHECK(out == sorted_input);
    }
    auto lex = sort_edges(edges, {OrderKind::kLexicographic});
    auto colex = sort_edges(edges, {OrderKind::kColexicographic});
    std::reverse(lex.begin(), lex.end());
    std::reverse(colex.begin(), colex.end());
    CHECK(sort_edges(edges, {OrderKind::kReverseLexicographic}) == lex);
    CHECK(sort_edges(edges, {OrderKind::kReverseColexicographic}) == colex);
  }
}

TEST_CASE("random order is reproducible and seed dependent") {
  const auto edges = oracle::random_graph(20, 0.5, 4, 5).edges();
  auto a = sort_edges(edges, {OrderKind::kRandom, 42});
  auto b = sort_edges(edges, {OrderKind::kRandom, 42});
  CHECK(a == b);
  CHECK(a != sort_edges(edges, {OrderKind::kRandom, 43}));
  auto shuffled_input = sort_edges(edges, {OrderKind::kRandom, 7});
  CHECK(sort_edges(shuffled_input, {OrderKind::kRandom, 42}) == a);
}

TEST_CASE("order names") {
  for (OrderKind kind : kAllOrderKinds) CHECK(parse_order_kind(to_string(kind)) == kind);
  CHECK_FALSE(parse_order_kind("reverse").has_value());
}
