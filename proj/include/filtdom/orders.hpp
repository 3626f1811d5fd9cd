#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "filtdom/graph.hpp"

namespace filtdom {

enum class OrderKind {
  kLexicographic,
  kColexicographic,
  kReverseLexicographic,
  kReverseColexicographic,
  kRandom,
};

/// A total order on edges completing the partial order on grades.
/// Ties in grade are broken by (u, v).
struct EdgeOrder {
  OrderKind kind = OrderKind::kReverseLexicographic;
  std::uint64_t seed = 0;  // random kind only
};

/// Identifier of the shuffle used by the random order, recorded in reports.
inline constexpr std::string_view kShuffleAlgorithm = "mt19937_64/fisher-yates-rejection";

inline constexpr OrderKind kAllOrderKinds[] = {
    OrderKind::kLexicographic, OrderKind::kColexicographic, OrderKind::kReverseLexicographic,
    OrderKind::kReverseColexicographic, OrderKind::kRandom};

/// CLI spelling: lex, colex, revlex, revcolex, random.
std::string_view to_string(OrderKind kind);
std::optional<OrderKind> parse_order_kind(std::string_view name);

/// Returns the edges sorted by `order`. Reverse kinds are the exact reversal of
/// their forward counterparts. The random kind shuffles the lexicographically
/// sorted input, so the result does not depend on the input permutation.
std::vector<Edge> sort_edges(std::span<const Edge> edges, const EdgeOrder& order);

}  // namespace filtdom
