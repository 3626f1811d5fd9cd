#include "filtdom/orders.hpp"

#include <algorithm>
#include <tuple>

#include "filtdom/random.hpp"

namespace filtdom {

std::string_view to_string(OrderKind kind) {
  switch (kind) {
    case OrderKind::kLexicographic: return "lex";
    case OrderKind::kColexicographic: return "colex";
    case OrderKind::kReverseLexicographic: return "revlex";
    case OrderKind::kReverseColexicographic: return "revcolex";
    case OrderKind::kRandom: return "random";
  }
  return "?";
}

std::optional<OrderKind> parse_order_kind(std::string_view name) {
  for (OrderKind kind : kAllOrderKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace {

bool lex_less(const Edge& a, const Edge& b) {
  return std::tie(a.grade.s, a.grade.t, a.u, a.v) < std::tie(b.grade.s, b.grade.t, b.u, b.v);
}

bool colex_less(const Edge& a, const Edge& b) {
  return std::tie(a.grade.t, a.grade.s, a.u, a.v) < std::tie(b.grade.t, b.grade.s, b.u, b.v);
}

}  // namespace

std::vector<Edge> sort_edges(std::span<const Edge> edges, const EdgeOrder& order) {
  std::vector<Edge> out(edges.begin(), edges.end());
  switch (order.kind) {
    case OrderKind::kLexicographic:
      std::sort(out.begin(), out.end(), lex_less);
      break;
    case OrderKind::kColexicographic:
      std::sort(out.begin(), out.end(), colex_less);
      break;
    case OrderKind::kReverseLexicographic:
      std::sort(out.begin(), out.end(), lex_less);
      std::reverse(out.begin(), out.end());
      break;
    case OrderKind::kReverseColexicographic:
      std::sort(out.begin(), out.end(), colex_less);
      std::reverse(out.begin(), out.end());
      break;
    case OrderKind::kRandom: {
      std::sort(out.begin(), out.end(), lex_less);
      Rng rng(order.seed);
      for (std::size_t i = out.size(); i > 1; --i) {
        std::swap(out[i - 1], out[uniform_below(rng, i)]);
      }
      break;
    }
  }
  return out;
}

}  // namespace filtdom
