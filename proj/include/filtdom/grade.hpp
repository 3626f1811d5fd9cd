#pragma once

#include <algorithm>
#include <compare>
#include <limits>
#include <ostream>

namespace filtdom {

/// A point of the two-parameter grade plane, ordered coordinate-wise.
///
/// The first coordinate is usually a negated density and the second an edge
/// length. The value `Grade::never()` sits above every finite grade and marks
/// an edge that is not present at any grade.
struct Grade {
  double s = 0.0;
  double t = 0.0;

  static constexpr Grade never() {
    return {std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
  }

  constexpr bool is_never() const {
    return s == std::numeric_limits<double>::infinity() &&
           t == std::numeric_limits<double>::infinity();
  }
  constexpr bool is_finite() const {
    return s < std::numeric_limits<double>::infinity() &&
           t < std::numeric_limits<double>::infinity() &&
           s > -std::numeric_limits<double>::infinity() &&
           t > -std::numeric_limits<double>::infinity();
  }

  friend constexpr bool operator==(const Grade&, const Grade&) = default;
};

/// Coordinate-wise partial order.
constexpr bool leq(const Grade& a, const Grade& b) {
  return a.s <= b.s && a.t <= b.t;
}

/// Least upper bound (coordinate-wise maximum). `never()` absorbs.
constexpr Grade join(const Grade& a, const Grade& b) {
  return {std::max(a.s, b.s), std::max(a.t, b.t)};
}

constexpr Grade join(const Grade& a, const Grade& b, const Grade& c) {
  return join(join(a, b), c);
}

/// Dictionary order on (s, t); used for sorting and deduplication only.
struct LexLess {
  constexpr bool operator()(const Grade& a, const Grade& b) const {
    return a.s < b.s || (a.s == b.s && a.t < b.t);
  }
};

inline std::ostream& operator<<(std::ostream& os, const Grade& g) {
  if (g.is_never()) return os << "(never)";
  return os << '(' << g.s << ", " << g.t << ')';
}

}  // namespace filtdom
