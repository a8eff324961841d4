#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "linecover/embedding.hpp"
#include "linecover/geom.hpp"
#include "linecover/graph.hpp"
#include "linecover/line_cover.hpp"

namespace linecover {

struct VerificationReport {
  bool planar = false;
  bool distinct_positions = false;
  std::vector<std::pair<std::size_t, std::size_t>> coincident_vertices;
  std::vector<std::pair<std::size_t, Edge>> vertex_on_edge;   // vertex, edge
  std::vector<std::pair<Edge, Edge>> crossings;
  std::size_t violation_count = 0;
  // exact minimum when it is at most the budget; unset when over budget or not run
  std::optional<std::size_t> line_cover_size;
  std::vector<Line> cover;
  bool cover_over_budget = false;
  bool cover_skipped = false;
};

namespace detail {

struct IntPoint {
  std::int64_t x, y;
};

inline int orient(const IntPoint& a, const IntPoint& b, const IntPoint& c) {
  const __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}
inline int orient(const Point& a, const Point& b, const Point& c) { return orientation(a, b, c); }

inline int dot_sign(const IntPoint& o, const IntPoint& a, const IntPoint& b) {
  const __int128 v = static_cast<__int128>(a.x - o.x) * (b.x - o.x) + static_cast<__int128>(a.y - o.y) * (b.y - o.y);
  return (v > 0) - (v < 0);
}
inline int dot_sign(const Point& o, const Point& a, const Point& b) { return sign(dot(a - o, b - o)); }

template <class P>
bool within_box(const P& a, const P& b, const P& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

// c lies on the closed segment ab.
template <class P>
bool on_closed(const P& a, const P& b, const P& c) {
  return orient(a, b, c) == 0 && within_box(a, b, c);
}

template <class P>
bool closed_segments_meet(const P& a, const P& b, const P& c, const P& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return (o1 == 0 && within_box(a, b, c)) || (o2 == 0 && within_box(a, b, d)) || (o3 == 0 && within_box(c, d, a)) ||
         (o4 == 0 && within_box(c, d, b));
}

// Edges conflict unless they meet only at a shared endpoint.
template <class P>
bool edges_conflict(const std::vector<P>& pos, const Edge& e, const Edge& f) {
  std::size_t shared = 0, p = 0, a = 0, b = 0;
  for (std::size_t u : {e.first, e.second})
    for (std::size_t v : {f.first, f.second})
      if (u == v) {
        ++shared;
        p = u;
      }
  if (shared == 0) return closed_segments_meet(pos[e.first], pos[e.second], pos[f.first], pos[f.second]);
  a = e.first == p ? e.second : e.first;
  b = f.first == p ? f.second : f.first;
  return orient(pos[p], pos[a], pos[b]) == 0 && dot_sign(pos[p], pos[a], pos[b]) > 0;
}

template <class P, class Key>
void sweep(const Graph& g, const std::vector<P>& pos, Key key, VerificationReport& rep, std::size_t cap) {
  const auto& edges = g.edges();
  const std::size_t n = g.vertex_count();
  auto record = [&](auto& list, auto item) {
    ++rep.violation_count;
    if (list.size() < cap) list.push_back(item);
  };

  std::vector<std::size_t> verts(n);
  for (std::size_t v = 0; v < n; ++v) verts[v] = v;
  std::sort(verts.begin(), verts.end(), [&](std::size_t a, std::size_t b) {
    return key(pos[a].x) < key(pos[b].x) || (pos[a].x == pos[b].x && key(pos[a].y) < key(pos[b].y));
  });
  for (std::size_t i = 1; i < n; ++i)
    if (pos[verts[i]].x == pos[verts[i - 1]].x && pos[verts[i]].y == pos[verts[i - 1]].y)
      record(rep.coincident_vertices, std::make_pair(verts[i - 1], verts[i]));
  rep.distinct_positions = rep.coincident_vertices.empty();

  // vertices inside each edge's x-range
  for (const Edge& e : edges) {
    const P& a = pos[e.first];
    const P& b = pos[e.second];
    const auto lo = std::min(a.x, b.x), hi = std::max(a.x, b.x);
    auto it = std::lower_bound(verts.begin(), verts.end(), lo,
                               [&](std::size_t v, const auto& x) { return key(pos[v].x) < key(x); });
    for (; it != verts.end() && pos[*it].x <= hi; ++it) {
      const std::size_t v = *it;
      if (v == e.first || v == e.second) continue;
      if (on_closed(a, b, pos[v])) record(rep.vertex_on_edge, std::make_pair(v, e));
    }
  }

  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto minx = [&](std::size_t i) { return std::min(pos[edges[i].first].x, pos[edges[i].second].x); };
  auto maxx = [&](std::size_t i) { return std::max(pos[edges[i].first].x, pos[edges[i].second].x); };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(minx(a)) < key(minx(b)); });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Edge& e = edges[order[i]];
    const auto hi = maxx(order[i]);
    const auto ylo = std::min(pos[e.first].y, pos[e.second].y), yhi = std::max(pos[e.first].y, pos[e.second].y);
    for (std::size_t j = i + 1; j < order.size() && minx(order[j]) <= hi; ++j) {
      const Edge& f = edges[order[j]];
      if (std::max(pos[f.first].y, pos[f.second].y) < ylo || std::min(pos[f.first].y, pos[f.second].y) > yhi) continue;
      if (edges_conflict(pos, e, f)) record(rep.crossings, std::make_pair(e, f));
    }
  }
}

}  // namespace detail

/// Exact planarity check of a straight-line drawing, plus a minimum line
/// cover of the vertex positions when cover_budget > 0.
inline VerificationReport verify_drawing(const Graph& g, const Drawing& d, int cover_budget = 0,
                                         std::size_t witness_cap = 16) {
  if (d.position.size() != g.vertex_count()) throw std::invalid_argument("verify_drawing: wrong vertex count");
  VerificationReport rep;
  constexpr std::int64_t bound = std::int64_t{1} << 40;
  bool small = true;
  for (const Point& p : d.position) {
    auto ix = as_small_integer(p.x), iy = as_small_integer(p.y);
    if (!ix || !iy || *ix > bound || *ix < -bound || *iy > bound || *iy < -bound) {
      small = false;
      break;
    }
  }
  if (small) {
    std::vector<detail::IntPoint> ip;
    ip.reserve(d.position.size());
    for (const Point& p : d.position) ip.push_back({*as_small_integer(p.x), *as_small_integer(p.y)});
    detail::sweep(g, ip, [](std::int64_t v) { return v; }, rep, witness_cap);
  } else {
    detail::sweep(g, d.position, [](const Rational& v) -> const Rational& { return v; }, rep, witness_cap);
  }
  rep.planar = rep.violation_count == 0;

  if (cover_budget > 0) {
    std::set<Point> unique(d.position.begin(), d.position.end());
    LineCoverLimits limits;
    if (unique.size() > limits.max_points || cover_budget > limits.max_budget) {
      rep.cover_skipped = true;
    } else if (auto c = min_line_cover(d.position, cover_budget, limits)) {
      rep.line_cover_size = c->size();
      rep.cover = std::move(*c);
    } else {
      rep.cover_over_budget = true;
    }
  }
  return rep;
}

}  // namespace linecover
