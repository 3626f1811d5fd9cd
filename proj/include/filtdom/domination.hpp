#pragma once

#include <optional>
#include <span>
#include <vector>

#include "filtdom/graph.hpp"

namespace filtdom {

/// The grade set {r : lower <= r and not upper <= r}: the difference of the
/// closed upper quadrants at `lower` and `upper`. Empty iff upper <= lower.
struct DeltaRegion {
  Grade lower;
  Grade upper;

  bool empty() const { return leq(upper, lower); }
  bool contains(const Grade& r) const { return leq(lower, r) && !leq(upper, r); }
};

/// Interior-disjoint half-open stripes along one axis, sorted by left end.
///
/// A stripe covers {(x, y) : lo <= x < hi, y >= bound}. For vertical stripes x
/// is the first grade coordinate, for horizontal stripes the second.
class StripeFamily {
 public:
  struct Stripe {
    double lo;
    double hi;
    double bound;

    friend constexpr bool operator==(const Stripe&, const Stripe&) = default;
  };

  StripeFamily() = default;

  /// Merges arbitrary (possibly overlapping) stripes into an equivalent
  /// interior-disjoint family by sweeping over the interval endpoints.
  static StripeFamily merge(std::vector<Stripe> raw);

  /// Binary search for the stripe whose interval holds `along`.
  bool contains(double along, double across) const;

  std::span<const Stripe> stripes() const { return stripes_; }
  bool empty() const { return stripes_.empty(); }

 private:
  std::vector<Stripe> stripes_;
};

/// Union of Δ-regions, stored as merged vertical and horizontal stripes.
class StripeSet {
 public:
  StripeSet() = default;
  static StripeSet from_regions(std::span<const DeltaRegion> regions);

  bool contains(const Grade& g) const {
    return vertical_.contains(g.s, g.t) || horizontal_.contains(g.t, g.s);
  }

  const StripeFamily& vertical() const { return vertical_; }
  const StripeFamily& horizontal() const { return horizontal_; }
  bool empty() const { return vertical_.empty() && horizontal_.empty(); }

 private:
  StripeFamily vertical_;
  StripeFamily horizontal_;
};

/// Smallest vertex that dominates `e` at every grade where `e` is present, if
/// any. A merged scan of the endpoint lists yields the edge neighborhood; each
/// potential strong dominator (linked to both endpoints by crit(e)) is then
/// checked with one in-order scan of its own adjacency list.
std::optional<Vertex> is_strongly_dominated(const BifilteredGraph& graph, const Edge& e);

/// The raw Δ-regions whose union is where `v` fails to dominate `e`: one for
/// `v` not being an edge neighbor, one per other edge neighbor not adjacent to
/// `v`. Empty regions are omitted.
std::vector<DeltaRegion> non_domination_deltas(const BifilteredGraph& graph, const Edge& e,
                                               Vertex v);

/// Region of non-domination of `v` for `e` as a merged stripe set.
StripeSet non_domination_region(const BifilteredGraph& graph, const Edge& e, Vertex v);

inline bool region_query(const StripeSet& region, const Grade& g) { return region.contains(g); }

/// crit(e) together with all pairwise joins of entry grades of edge
/// neighbors (a neighbor may be paired with itself). Sorted lexicographically,
/// without duplicates.
std::vector<Grade> critical_query_set(const BifilteredGraph& graph, const Edge& e);

/// Whether `e` is dominated at every grade where it is present.
bool is_filtration_dominated(const BifilteredGraph& graph, const Edge& e);

/// Whether `e` is dominated in the subgraph at the single grade `g`. False when
/// `e` is not present at `g`.
bool is_dominated_at(const BifilteredGraph& graph, const Edge& e, const Grade& g);

}  // namespace filtdom
