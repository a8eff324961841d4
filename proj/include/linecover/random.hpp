#pragma once

// Seeded random instance generators shared by the property suites.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "linecover/arrangement.hpp"
#include "linecover/geom.hpp"

namespace linecover::random {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
inline double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// Simple polygon with p vertices: stratified angles around the origin,
/// radii perturbed in [0.3, 1] * scale, snapped to integers. Non-simple
/// draws are rejected and redrawn.
inline Polygon simple_polygon(Rng& rng, std::size_t p, long scale = 1000) {
  if (p < 3) throw std::invalid_argument("simple_polygon: p < 3");
  for (;;) {
    std::vector<Point> pts;
    pts.reserve(p);
    for (std::size_t i = 0; i < p; ++i) {
      const double theta = 2 * std::numbers::pi * (static_cast<double>(i) + uniform_real(rng, 0.1, 0.9)) /
                           static_cast<double>(p);
      const double rad = uniform_real(rng, 0.3, 1.0) * static_cast<double>(scale);
      pts.emplace_back(std::lround(rad * std::cos(theta)), std::lround(rad * std::sin(theta)));
    }
    bool distinct = true;
    for (std::size_t i = 0; i < p; ++i)
      if (pts[i] == pts[(i + 1) % p]) distinct = false;
    if (!distinct) continue;
    Polygon poly(std::move(pts));
    if (polygon_is_simple(poly)) return poly;
  }
}

inline Point random_point_in_box(Rng& rng, long scale) {
  return {uniform_int(rng, -scale, scale), uniform_int(rng, -scale, scale)};
}

/// A line likely to meet the polygon; a share of draws pass through vertices
/// to exercise degenerate clipping.
inline Line line_near_polygon(Rng& rng, const Polygon& poly, long scale = 1000) {
  for (;;) {
    const auto mode = uniform_int(rng, 0, 3);
    const Point& v = poly[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(poly.size()) - 1))];
    const Point& w = poly[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(poly.size()) - 1))];
    Point p, q;
    switch (mode) {
      case 0: p = random_point_in_box(rng, scale); q = random_point_in_box(rng, scale); break;
      case 1: p = v; q = random_point_in_box(rng, scale); break;
      case 2: p = v; q = w; break;
      default: p = v; q = v + Point(1, 0); break;
    }
    if (p == q) continue;
    return Line::through(p, q);
  }
}

/// Arrangement of up to `lines` lines meeting the polygon with every crossing
/// outside its interior. Lines are drawn around a common random direction and
/// rejected one at a time when they would cross inside.
inline Arrangement arrangement_avoiding(Rng& rng, const Polygon& poly, std::size_t lines, long scale = 1000) {
  std::vector<Line> chosen;
  const double base = uniform_real(rng, 0, std::numbers::pi);
  const double spread = uniform_real(rng, 0.0, 1.2);
  std::size_t attempts = 0;
  while (chosen.size() < lines && attempts < 2000) {
    ++attempts;
    const double ang = base + uniform_real(rng, -spread, spread);
    const Point through = random_point_in_box(rng, scale);
    const Point dir(std::lround(1000 * std::cos(ang)), std::lround(1000 * std::sin(ang)));
    if (dir == Point(0, 0)) continue;
    Line cand = Line::through(through, through + dir);
    if (clip_line_unchecked(cand, poly).empty()) continue;
    if (std::find(chosen.begin(), chosen.end(), cand) != chosen.end()) continue;
    bool ok = true;
    for (const Line& l : chosen) {
      if (auto x = intersect(l, cand); x && locate_point(*x, poly) == Location::inside) {
        ok = false;
        break;
      }
    }
    if (ok) chosen.push_back(std::move(cand));
  }
  return Arrangement(std::move(chosen));
}

/// Uniform rational point strictly inside an open segment.
inline Point point_on_open_segment(Rng& rng, const Segment& s) {
  const long den = 64;
  const Rational t(uniform_int(rng, 1, den - 1), den);
  return s.a + t * (s.b - s.a);
}

/// Host/inner pair satisfying the hypotheses of the free-segment lemma:
/// inner polygon vertices on segments of the clipped system, inner boundary
/// inside the host. Returns nullopt when a draw could not be completed.
struct FreeSegmentInstance {
  Arrangement arrangement;
  SegmentSystem system;
  Polygon inner;
};

inline std::optional<FreeSegmentInstance> free_segment_instance(Rng& rng, std::size_t p, std::size_t lines,
                                                                int tries = 200) {
  Polygon host = simple_polygon(rng, p);
  Arrangement arr = arrangement_avoiding(rng, host, lines);
  SegmentSystem sys = clip_arrangement(arr, host);
  if (sys.size() < 2) return std::nullopt;
  for (int t = 0; t < tries; ++t) {
    const auto k = static_cast<std::size_t>(uniform_int(rng, 3, 6));
    std::vector<Point> pts;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& seg = sys.segments[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(sys.size()) - 1))];
      pts.push_back(point_on_open_segment(rng, seg.segment));
    }
    // order by angle around the vertex centroid
    Rational cx = 0, cy = 0;
    for (const Point& q : pts) {
      cx += q.x;
      cy += q.y;
    }
    const Point c(cx / static_cast<long>(k), cy / static_cast<long>(k));
    auto half = [&](const Point& q) {
      const Point d = q - c;
      return d.y > 0 || (d.y == 0 && d.x > 0) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
      const int ha = half(a), hb = half(b);
      if (ha != hb) return ha < hb;
      return cross(a - c, b - c) > 0;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) continue;
    bool distinct = true;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pts[i] == pts[(i + 1) % pts.size()]) distinct = false;
    if (!distinct) continue;
    Polygon inner(pts);
    if (!polygon_is_simple(inner)) continue;
    bool crosses = false;
    for (std::size_t i = 0; i < inner.size() && !crosses; ++i)
      for (std::size_t j = 0; j < host.size() && !crosses; ++j)
        crosses = intersects(inner.edge(i), host.edge(j));
    if (crosses) continue;
    return FreeSegmentInstance{std::move(arr), std::move(sys), std::move(inner)};
  }
  return std::nullopt;
}

}  // namespace linecover::random
