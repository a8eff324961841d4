#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "linecover/geom.hpp"

namespace linecover {

/// Raised when an operation's geometric precondition does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Lemma-3 style decompositions need a polygon free of arrangement crossings.
class CrossingInsideError : public PreconditionError {
 public:
  explicit CrossingInsideError(const Point& p)
      : PreconditionError("arrangement crossing inside polygon"), crossing(p) {}
  Point crossing;
};

class Arrangement {
 public:
  Arrangement() = default;
  explicit Arrangement(std::vector<Line> lines) : lines_(std::move(lines)) {
    std::set<Line> seen;
    for (const Line& l : lines_)
      if (!seen.insert(l).second) throw std::invalid_argument("arrangement contains a duplicate line");
  }

  std::size_t size() const { return lines_.size(); }
  const std::vector<Line>& lines() const { return lines_; }
  const Line& operator[](std::size_t i) const { return lines_[i]; }

  bool on_some_line(const Point& p) const {
    return std::any_of(lines_.begin(), lines_.end(), [&](const Line& l) { return l.contains(p); });
  }

 private:
  std::vector<Line> lines_;
};

/// All pairwise crossing points, deduplicated and sorted.
inline std::vector<Point> crossings(const Arrangement& arr) {
  std::set<Point> pts;
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (std::size_t j = i + 1; j < arr.size(); ++j)
      if (auto p = intersect(arr[i], arr[j])) pts.insert(*p);
  return {pts.begin(), pts.end()};
}

inline std::vector<Point> crossings_inside(const Arrangement& arr, const Polygon& poly) {
  std::vector<Point> out;
  for (Point& p : crossings(arr))
    if (locate_point(p, poly) == Location::inside) out.push_back(std::move(p));
  return out;
}

struct ClippedSegment {
  Segment segment;
  std::size_t line;  // index into the arrangement
};

/// Disjoint open segments cut from an arrangement by a host polygon.
struct SegmentSystem {
  Polygon host;
  std::vector<ClippedSegment> segments;

  std::size_t size() const { return segments.size(); }
};

inline SegmentSystem clip_arrangement(const Arrangement& arr, const Polygon& poly) {
  if (!polygon_is_simple(poly)) throw PreconditionError("clip_arrangement: polygon is not simple");
  SegmentSystem sys{poly, {}};
  for (std::size_t i = 0; i < arr.size(); ++i)
    for (Segment& s : clip_line_unchecked(arr[i], poly)) sys.segments.push_back({std::move(s), i});
  return sys;
}

struct RegionAdjacency {
  std::size_t first;
  std::size_t second;
  std::size_t segment;  // index into the segment system
};

struct RegionDecomposition {
  SegmentSystem system;
  std::vector<Polygon> regions;
  std::vector<RegionAdjacency> adjacencies;
};

namespace detail {

/// Index of p in the boundary cycle, inserting it on the edge that carries it.
inline std::size_t insert_on_boundary(std::vector<Point>& verts, const Point& p) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i] == p) return i;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Point& u = verts[i];
    const Point& v = verts[(i + 1) % verts.size()];
    if (on_closed_segment(p, u, v)) {
      verts.insert(verts.begin() + static_cast<std::ptrdiff_t>(i + 1), p);
      return i + 1;
    }
  }
  throw std::logic_error("chord endpoint is not on the region boundary");
}

}  // namespace detail

/// Splits the host polygon along each clipped segment in turn. Every segment
/// is a chord of exactly one current region because segments are pairwise
/// disjoint and no two lines cross inside the host.
inline RegionDecomposition region_decomposition(const Arrangement& arr, const Polygon& poly) {
  if (!polygon_is_simple(poly)) throw PreconditionError("region_decomposition: polygon is not simple");
  if (auto inside = crossings_inside(arr, poly); !inside.empty()) throw CrossingInsideError(inside.front());

  RegionDecomposition dec{clip_arrangement(arr, poly), {poly}, {}};
  for (std::size_t k = 0; k < dec.system.size(); ++k) {
    const Segment& chord = dec.system.segments[k].segment;
    const Point mid = chord.midpoint();
    std::size_t r = 0;
    while (r < dec.regions.size() && locate_point(mid, dec.regions[r]) != Location::inside) ++r;
    if (r == dec.regions.size()) throw std::logic_error("chord midpoint not inside any region");

    std::vector<Point> verts = dec.regions[r].vertices();
    detail::insert_on_boundary(verts, chord.a);
    std::size_t ib = detail::insert_on_boundary(verts, chord.b);
    std::size_t ia = static_cast<std::size_t>(std::find(verts.begin(), verts.end(), chord.a) - verts.begin());
    if (ia > ib) std::swap(ia, ib);

    std::vector<Point> left(verts.begin() + static_cast<std::ptrdiff_t>(ia),
                            verts.begin() + static_cast<std::ptrdiff_t>(ib) + 1);
    std::vector<Point> right(verts.begin() + static_cast<std::ptrdiff_t>(ib), verts.end());
    right.insert(right.end(), verts.begin(), verts.begin() + static_cast<std::ptrdiff_t>(ia) + 1);

    Polygon first(std::move(left));
    Polygon second(std::move(right));
    const std::size_t fresh = dec.regions.size();
    for (RegionAdjacency& adj : dec.adjacencies) {
      for (std::size_t* end : {&adj.first, &adj.second}) {
        if (*end != r) continue;
        const Point m = dec.system.segments[adj.segment].segment.midpoint();
        if (locate_point(m, first) != Location::boundary) *end = fresh;
      }
    }
    dec.regions[r] = std::move(first);
    dec.regions.push_back(std::move(second));
    dec.adjacencies.push_back({r, fresh, k});
  }
  return dec;
}

/// Segments of sys whose closures avoid the interior of inner. The inner
/// polygon must sit inside the host with boundaries disjoint and every vertex
/// on an open segment of sys.
inline std::vector<ClippedSegment> free_segments(const SegmentSystem& sys, const Polygon& inner) {
  if (!polygon_is_simple(inner)) throw PreconditionError("free_segments: inner polygon is not simple");
  for (const Point& v : inner.vertices()) {
    const bool carried = std::any_of(sys.segments.begin(), sys.segments.end(),
                                     [&](const ClippedSegment& s) { return on_segment(v, s.segment); });
    if (!carried) throw PreconditionError("free_segments: inner vertex off every segment");
  }
  for (std::size_t i = 0; i < inner.size(); ++i)
    for (std::size_t j = 0; j < sys.host.size(); ++j)
      if (intersects(inner.edge(i), sys.host.edge(j)))
        throw PreconditionError("free_segments: inner polygon meets host boundary");

  std::vector<ClippedSegment> out;
  for (const ClippedSegment& s : sys.segments) {
    const Segment closed(s.segment.a, s.segment.b, Openness::closed);
    if (!closed_segment_meets_interior(closed, inner)) out.push_back(s);
  }
  return out;
}

}  // namespace linecover
