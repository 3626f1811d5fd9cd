#include "filtdom/domination.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace filtdom {

StripeFamily StripeFamily::merge(std::vector<Stripe> raw) {
  std::erase_if(raw, [](const Stripe& s) { return !(s.lo < s.hi); });
  std::sort(raw.begin(), raw.end(), [](const Stripe& a, const Stripe& b) { return a.lo < b.lo; });
  std::vector<double> xs;
  xs.reserve(2 * raw.size());
  for (const auto& s : raw) {
    xs.push_back(s.lo);
    xs.push_back(s.hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Sweep left to right keeping the open stripes in a min-heap on the lower
  // bound; stripes that already ended are dropped lazily from the top.
  auto by_bound = [](const Stripe& a, const Stripe& b) { return a.bound > b.bound; };
  std::vector<Stripe> open;
  StripeFamily out;
  auto& merged = out.stripes_;
  std::size_t next_start = 0;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const double x = xs[k];
    for (; next_start < raw.size() && raw[next_start].lo == x; ++next_start) {
      open.push_back(raw[next_start]);
      std::push_heap(open.begin(), open.end(), by_bound);
    }
    while (!open.empty() && open.front().hi <= x) {
      std::pop_heap(open.begin(), open.end(), by_bound);
      open.pop_back();
    }
    if (open.empty()) continue;
    const double bound = open.front().bound;
    if (!merged.empty() && merged.back().hi == x && merged.back().bound == bound) {
      merged.back().hi = xs[k + 1];
    } else {
      merged.push_back({x, xs[k + 1], bound});
    }
  }
  return out;
}

bool StripeFamily::contains(double along, double across) const {
  auto it = std::upper_bound(stripes_.begin(), stripes_.end(), along,
                             [](double x, const Stripe& s) { return x < s.lo; });
  if (it == stripes_.begin()) return false;
  --it;
  return along < it->hi && across >= it->bound;
}

StripeSet StripeSet::from_regions(std::span<const DeltaRegion> regions) {
  std::vector<StripeFamily::Stripe> vertical;
  std::vector<StripeFamily::Stripe> horizontal;
  for (const auto& d : regions) {
    if (d.empty()) continue;
    const Grade& p = d.lower;
    const Grade& q = d.upper;
    if (p.s < q.s) vertical.push_back({p.s, q.s, p.t});
    if (p.t < q.t) horizontal.push_back({p.t, q.t, p.s});
  }
  StripeSet out;
  out.vertical_ = StripeFamily::merge(std::move(vertical));
  out.horizontal_ = StripeFamily::merge(std::move(horizontal));
  return out;
}

namespace {

struct NeighborDetail {
  Vertex w;
  Grade to_a;  // crit({a, w})
  Grade to_b;  // crit({b, w})
  Grade entry;
};

std::vector<NeighborDetail> neighborhood_detail(const BifilteredGraph& graph, const Edge& edge) {
  auto la = graph.neighbors(edge.u);
  auto lb = graph.neighbors(edge.v);
  std::vector<NeighborDetail> out;
  std::size_t i = 0, j = 0;
  while (i < la.size() && j < lb.size()) {
    if (la[i].id < lb[j].id) {
      ++i;
    } else if (lb[j].id < la[i].id) {
      ++j;
    } else {
      out.push_back({la[i].id, la[i].grade, lb[j].grade, join(la[i].grade, lb[j].grade, edge.grade)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Candidates are the potential strong dominators, tried in ascending id. Each
// one costs a single scan of its adjacency list against the neighborhood,
// stopping at the first neighbor it misses.
std::optional<Vertex> strong_dominator(const BifilteredGraph& graph, const Edge& edge,
                                       const std::vector<NeighborDetail>& nbhd) {
  for (const auto& cand : nbhd) {
    if (!(leq(cand.to_a, edge.grade) && leq(cand.to_b, edge.grade))) continue;
    auto adj = graph.neighbors(cand.w);
    std::size_t cursor = 0;
    bool dominates = true;
    for (const auto& n : nbhd) {
      if (n.w == cand.w) continue;
      while (cursor < adj.size() && adj[cursor].id < n.w) ++cursor;
      if (cursor == adj.size() || adj[cursor].id != n.w || !leq(adj[cursor].grade, n.entry)) {
        dominates = false;
        break;
      }
    }
    if (dominates) return cand.w;
  }
  return std::nullopt;
}

// Δ-regions for candidate nbhd[index]: one for the candidate not being an edge
// neighbor, one for each other neighbor w it is not yet adjacent to.
std::vector<DeltaRegion> deltas_for(const BifilteredGraph& graph, const Edge& edge,
                                    const std::vector<NeighborDetail>& nbhd, std::size_t index) {
  const NeighborDetail& cand = nbhd[index];
  std::vector<DeltaRegion> out;
  DeltaRegion own{edge.grade, join(cand.to_a, cand.to_b)};
  if (!own.empty()) out.push_back(own);

  auto adj = graph.neighbors(cand.w);
  std::size_t cursor = 0;
  for (const auto& n : nbhd) {
    if (n.w == cand.w) continue;
    while (cursor < adj.size() && adj[cursor].id < n.w) ++cursor;
    const Grade link =
        cursor < adj.size() && adj[cursor].id == n.w ? adj[cursor].grade : Grade::never();
    DeltaRegion d{n.entry, link};
    if (!d.empty()) out.push_back(d);
  }
  return out;
}

std::vector<Grade> query_set(const Edge& edge, const std::vector<NeighborDetail>& nbhd) {
  std::vector<Grade> out;
  out.reserve(1 + nbhd.size() * (nbhd.size() + 1) / 2);
  out.push_back(edge.grade);
  for (std::size_t i = 0; i < nbhd.size(); ++i) {
    for (std::size_t j = i; j < nbhd.size(); ++j) {
      out.push_back(join(nbhd[i].entry, nbhd[j].entry));
    }
  }
  std::sort(out.begin(), out.end(), LexLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::optional<Vertex> is_strongly_dominated(const BifilteredGraph& graph, const Edge& e) {
  const Edge edge = canonical_edge(graph, e);
  return strong_dominator(graph, edge, neighborhood_detail(graph, edge));
}

std::vector<DeltaRegion> non_domination_deltas(const BifilteredGraph& graph, const Edge& e,
                                               Vertex v) {
  const Edge edge = canonical_edge(graph, e);
  const auto nbhd = neighborhood_detail(graph, edge);
  auto it = std::find_if(nbhd.begin(), nbhd.end(),
                         [v](const NeighborDetail& n) { return n.w == v; });
  if (it == nbhd.end()) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " is never an edge neighbor of the edge");
  }
  return deltas_for(graph, edge, nbhd, static_cast<std::size_t>(it - nbhd.begin()));
}

StripeSet non_domination_region(const BifilteredGraph& graph, const Edge& e, Vertex v) {
  return StripeSet::from_regions(non_domination_deltas(graph, e, v));
}

std::vector<Grade> critical_query_set(const BifilteredGraph& graph, const Edge& e) {
  const Edge edge = canonical_edge(graph, e);
  return query_set(edge, neighborhood_detail(graph, edge));
}

bool is_filtration_dominated(const BifilteredGraph& graph, const Edge& e) {
  const Edge edge = canonical_edge(graph, e);
  const auto nbhd = neighborhood_detail(graph, edge);
  if (nbhd.empty()) return false;
  // Strong domination implies filtration-domination and is much cheaper.
  if (strong_dominator(graph, edge, nbhd)) return true;

  // Candidates are first tested by a direct scan, which exits at the first
  // missing link. A candidate that succeeds gets its stripe set built, so
  // the many later queries it answers cost a binary search each.
  std::vector<std::optional<StripeSet>> regions(nbhd.size());
  auto direct_check = [&](std::size_t i, const Grade& c) {
    auto adj = graph.neighbors(nbhd[i].w);
    std::size_t cursor = 0;
    for (const auto& n : nbhd) {
      if (n.w == nbhd[i].w || !leq(n.entry, c)) continue;
      while (cursor < adj.size() && adj[cursor].id < n.w) ++cursor;
      if (cursor == adj.size() || adj[cursor].id != n.w || !leq(adj[cursor].grade, c)) {
        return false;
      }
    }
    return true;
  };
  std::size_t last_winner = 0;
  auto dominated_at = [&](const Grade& c) {
    auto dominates = [&](std::size_t i) {
      if (!leq(nbhd[i].entry, c)) return false;
      if (regions[i]) return !regions[i]->contains(c);
      if (!direct_check(i, c)) return false;
      const auto deltas = deltas_for(graph, edge, nbhd, i);
      regions[i] = StripeSet::from_regions(deltas);
      return true;
    };
    if (dominates(last_winner)) return true;
    for (std::size_t i = 0; i < nbhd.size(); ++i) {
      if (i != last_winner && dominates(i)) {
        last_winner = i;
        return true;
      }
    }
    return false;
  };

  // Every grade of the query set is visited; crit(e) and the single entry
  // grades come first since non-dominated edges usually fail there.
  if (!dominated_at(edge.grade)) return false;
  for (const auto& n : nbhd) {
    if (!dominated_at(n.entry)) return false;
  }
  for (std::size_t i = 0; i < nbhd.size(); ++i) {
    for (std::size_t j = i + 1; j < nbhd.size(); ++j) {
      const Grade c = join(nbhd[i].entry, nbhd[j].entry);
      if (c == nbhd[i].entry || c == nbhd[j].entry) continue;
      if (!dominated_at(c)) return false;
    }
  }
  return true;
}

bool is_dominated_at(const BifilteredGraph& graph, const Edge& e, const Grade& g) {
  const Edge edge = canonical_edge(graph, e);
  if (!leq(edge.grade, g)) return false;
  std::vector<Vertex> present;
  for (const auto& n : neighborhood_detail(graph, edge)) {
    if (leq(n.entry, g)) present.push_back(n.w);
  }
  for (Vertex v : present) {
    auto adj = graph.neighbors(v);
    std::size_t cursor = 0;
    bool dominates = true;
    for (Vertex w : present) {
      if (w == v) continue;
      while (cursor < adj.size() && adj[cursor].id < w) ++cursor;
      if (cursor == adj.size() || adj[cursor].id != w || !leq(adj[cursor].grade, g)) {
        dominates = false;
        break;
      }
    }
    if (dominates) return true;
  }
  return false;
}

}  // namespace filtdom
