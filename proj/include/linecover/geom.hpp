#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "linecover/rational.hpp"

namespace linecover {

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
  friend std::ostream& operator<<(std::ostream& os, const Point& p) {
    return os << '(' << to_string(p.x) << ", " << to_string(p.y) << ')';
  }
};

inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

/// Sign of the signed area of triangle abc: +1 counterclockwise, -1 clockwise, 0 collinear.
inline int orientation(const Point& a, const Point& b, const Point& c) {
  return sgn(cross(b - a, c - a));
}

/// The locus a*x + b*y = c, stored with the first nonzero of (a, b) equal to 1.
class Line {
 public:
  Line(Rational a, Rational b, Rational c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ == 0 && b_ == 0) throw std::invalid_argument("line with a = b = 0");
    const Rational lead = a_ != 0 ? a_ : b_;
    a_ /= lead;
    b_ /= lead;
    c_ /= lead;
  }

  static Line through(const Point& p, const Point& q) {
    if (p == q) throw std::invalid_argument("line through coincident points");
    return Line(q.y - p.y, p.x - q.x, (q.y - p.y) * p.x + (p.x - q.x) * p.y);
  }
  static Line horizontal(Rational y) { return Line(0, 1, std::move(y)); }
  static Line vertical(Rational x) { return Line(1, 0, std::move(x)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }

  /// Signed residual a*x + b*y - c.
  Rational eval(const Point& p) const { return a_ * p.x + b_ * p.y - c_; }
  bool contains(const Point& p) const { return eval(p) == 0; }

  /// Direction vector (b, -a); dot(p, direction()) increases monotonically along the line.
  /// Horizontal lines run toward +x.
  Point direction() const { return {b_, -a_}; }
  Point anchor() const { return a_ != 0 ? Point(c_ / a_, Rational(0)) : Point(Rational(0), c_ / b_); }
  /// Point on the line whose parameter dot(p, direction()) equals s.
  Point at(const Rational& s) const {
    const Point d = direction();
    const Point base = anchor();
    return base + ((s - dot(base, d)) / dot(d, d)) * d;
  }

  friend bool operator==(const Line& l, const Line& m) { return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_; }
  friend bool operator<(const Line& l, const Line& m) {
    if (l.a_ != m.a_) return l.a_ < m.a_;
    if (l.b_ != m.b_) return l.b_ < m.b_;
    return l.c_ < m.c_;
  }
  friend std::ostream& operator<<(std::ostream& os, const Line& l) {
    return os << to_string(l.a_) << "x + " << to_string(l.b_) << "y = " << to_string(l.c_);
  }

 private:
  Rational a_;
  Rational b_;
  Rational c_;
};

inline bool parallel(const Line& l, const Line& m) { return l.a() * m.b() == l.b() * m.a(); }

inline std::optional<Point> intersect(const Line& l, const Line& m) {
  const Rational det = l.a() * m.b() - l.b() * m.a();
  if (det == 0) return std::nullopt;
  return Point((l.c() * m.b() - l.b() * m.c()) / det, (l.a() * m.c() - l.c() * m.a()) / det);
}

enum class Openness { open, closed };

struct Segment {
  Point a;
  Point b;
  Openness openness = Openness::closed;

  Segment() = default;
  Segment(Point p, Point q, Openness o = Openness::closed) : a(std::move(p)), b(std::move(q)), openness(o) {
    if (a == b) throw std::invalid_argument("segment with coincident endpoints");
  }

  bool is_open() const { return openness == Openness::open; }
  bool is_endpoint(const Point& p) const { return p == a || p == b; }
  Line line() const { return Line::through(a, b); }
  Point midpoint() const { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

  friend std::ostream& operator<<(std::ostream& os, const Segment& s) {
    return os << (s.is_open() ? "open" : "closed") << '[' << s.a << ", " << s.b << ']';
  }
  friend bool operator==(const Segment& s, const Segment& t) {
    return s.openness == t.openness && ((s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a));
  }
};

/// True when p lies on the closed segment [a, b].
inline bool on_closed_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

inline bool on_segment(const Point& p, const Segment& s) {
  if (!on_closed_segment(p, s.a, s.b)) return false;
  return !(s.is_open() && s.is_endpoint(p));
}

struct Disjoint {};
struct PointHit {
  Point point;
  bool interior_to_first;   // not an endpoint of the first segment
  bool interior_to_second;  // not an endpoint of the second segment
};
struct Overlap {
  Segment segment;
};
using SegmentIntersection = std::variant<Disjoint, PointHit, Overlap>;

namespace detail {

inline bool included(const Point& p, const Segment& s) { return !(s.is_open() && s.is_endpoint(p)); }

inline SegmentIntersection point_result(const Point& p, const Segment& s1, const Segment& s2) {
  if (!included(p, s1) || !included(p, s2)) return Disjoint{};
  return PointHit{p, !s1.is_endpoint(p), !s2.is_endpoint(p)};
}

}  // namespace detail

/// Exact intersection of two segments, honouring openness. An overlap is
/// reported closed only when both of its endpoints belong to both inputs.
inline SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
  const int o1 = orientation(s1.a, s1.b, s2.a);
  const int o2 = orientation(s1.a, s1.b, s2.b);
  const int o3 = orientation(s2.a, s2.b, s1.a);
  const int o4 = orientation(s2.a, s2.b, s1.b);

  if (o1 == 0 && o2 == 0) {
    const Point d = s1.b - s1.a;
    const Rational len = dot(d, d);
    const Rational tc = dot(s2.a - s1.a, d);
    const Rational td = dot(s2.b - s1.a, d);
    const Rational lo = std::max(Rational(0), std::min(tc, td));
    const Rational hi = std::min(len, std::max(tc, td));
    if (lo > hi) return Disjoint{};
    const Point plo = s1.a + (lo / len) * d;
    if (lo == hi) return detail::point_result(plo, s1, s2);
    const Point phi = s1.a + (hi / len) * d;
    const bool closed = detail::included(plo, s1) && detail::included(plo, s2) && detail::included(phi, s1) &&
                        detail::included(phi, s2);
    return Overlap{Segment(plo, phi, closed ? Openness::closed : Openness::open)};
  }

  if (o1 * o2 > 0 || o3 * o4 > 0) return Disjoint{};
  if (o1 == 0) return detail::point_result(s2.a, s1, s2);
  if (o2 == 0) return detail::point_result(s2.b, s1, s2);
  if (o3 == 0) return detail::point_result(s1.a, s1, s2);
  if (o4 == 0) return detail::point_result(s1.b, s1, s2);
  const auto p = intersect(s1.line(), s2.line());
  return detail::point_result(*p, s1, s2);
}

inline bool intersects(const Segment& s1, const Segment& s2) {
  return !std::holds_alternative<Disjoint>(segment_intersection(s1, s2));
}

class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i] == vertices_[(i + 1) % vertices_.size()])
        throw std::invalid_argument("polygon has coincident consecutive vertices");
  }

  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  Segment edge(std::size_t i) const { return Segment(vertex(i), vertex(i + 1)); }

  /// Twice the signed area; positive for counterclockwise vertex order.
  Rational signed_area2() const {
    Rational s = 0;
    for (std::size_t i = 0; i < size(); ++i) s += cross(vertex(i), vertex(i + 1));
    return s;
  }

  friend bool operator==(const Polygon& p, const Polygon& q) { return p.vertices_ == q.vertices_; }

 private:
  std::vector<Point> vertices_;
};

inline bool polygon_is_simple(const Polygon& poly) {
  const std::size_t p = poly.size();
  if (p < 3) return false;
  for (std::size_t i = 0; i < p; ++i) {
    // Adjacent edges (a,b),(b,c) may only share b: reject a zero-angle fold.
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex(i + 1);
    const Point& c = poly.vertex(i + 2);
    if (a == c) return false;
    if (orientation(a, b, c) == 0 && dot(a - b, c - b) > 0) return false;
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == p - 1);
      if (adjacent) continue;
      if (intersects(poly.edge(i), poly.edge(j))) return false;
    }
  }
  return true;
}

enum class Location { inside, boundary, outside };

inline std::ostream& operator<<(std::ostream& os, Location l) {
  switch (l) {
    case Location::inside: return os << "inside";
    case Location::boundary: return os << "boundary";
    case Location::outside: return os << "outside";
  }
  return os;
}

/// Ray casting without the simplicity check; callers guarantee a simple polygon.
inline Location locate_point(const Point& pt, const Polygon& poly) {
  bool odd = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& u = poly.vertex(i);
    const Point& v = poly.vertex(i + 1);
    if (on_closed_segment(pt, u, v)) return Location::boundary;
    if ((u.y > pt.y) != (v.y > pt.y)) {
      if ((orientation(u, v, pt) > 0) == (v.y > u.y)) odd = !odd;
    }
  }
  return odd ? Location::inside : Location::outside;
}

inline Location point_in_polygon(const Point& pt, const Polygon& poly) {
  if (!polygon_is_simple(poly)) throw std::invalid_argument("point_in_polygon: polygon is not simple");
  return locate_point(pt, poly);
}

/// Maximal open segments of line ∩ interior(poly), ordered along line.direction().
/// No simplicity check; see clip_line_to_polygon.
inline std::vector<Segment> clip_line_unchecked(const Line& line, const Polygon& poly) {
  const Point d = line.direction();
  std::vector<Rational> params;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& u = poly.vertex(i);
    const Point& v = poly.vertex(i + 1);
    const Rational fu = line.eval(u);
    const Rational fv = line.eval(v);
    if (fu == 0) params.push_back(dot(u, d));
    if (fv == 0) params.push_back(dot(v, d));
    if ((fu > 0 && fv < 0) || (fu < 0 && fv > 0)) {
      const Point hit = u + (fu / (fu - fv)) * (v - u);
      params.push_back(dot(hit, d));
    }
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());

  std::vector<Segment> out;
  for (std::size_t i = 0; i + 1 < params.size(); ++i) {
    const Point lo = line.at(params[i]);
    const Point hi = line.at(params[i + 1]);
    const Point mid{(lo.x + hi.x) / 2, (lo.y + hi.y) / 2};
    if (locate_point(mid, poly) == Location::inside) out.emplace_back(lo, hi, Openness::open);
  }
  return out;
}

inline std::vector<Segment> clip_line_to_polygon(const Line& line, const Polygon& poly) {
  if (!polygon_is_simple(poly)) throw std::invalid_argument("clip_line_to_polygon: polygon is not simple");
  return clip_line_unchecked(line, poly);
}

/// Whether the closed segment s meets the open interior of a simple polygon.
inline bool closed_segment_meets_interior(const Segment& s, const Polygon& poly) {
  const Line line = s.line();
  const Point d = line.direction();
  Rational lo = dot(s.a, d);
  Rational hi = dot(s.b, d);
  if (hi < lo) std::swap(lo, hi);
  for (const Segment& piece : clip_line_unchecked(line, poly)) {
    // Open piece (u, v) against closed [lo, hi]; pieces are non-degenerate.
    const Rational u = dot(piece.a, d);
    const Rational v = dot(piece.b, d);
    if (u < hi && lo < v) return true;
  }
  return false;
}

}  // namespace linecover
