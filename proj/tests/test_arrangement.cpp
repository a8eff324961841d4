#include <gtest/gtest.h>

#include <bit>
#include <functional>
#include <numeric>

#include "linecover/arrangement.hpp"
#include "linecover/line_cover.hpp"
#include "linecover/random.hpp"

using namespace linecover;

namespace {

Polygon square(long lo, long hi) { return Polygon({{lo, lo}, {hi, lo}, {hi, hi}, {lo, hi}}); }

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Independent check that a closed segment reaches the open interior of a
// polygon: probe the endpoints, every boundary hit, and the midpoints between
// consecutive hits.
bool closure_meets_interior_oracle(const Segment& s, const Polygon& q) {
  const Point d = s.b - s.a;
  std::vector<Rational> ts{0, 1};
  for (std::size_t i = 0; i < q.size(); ++i) {
    Segment e = q.edge(i);
    auto hit = segment_intersection(Segment(s.a, s.b), e);
    if (auto* h = std::get_if<PointHit>(&hit)) ts.push_back(dot(h->point - s.a, d) / dot(d, d));
    if (auto* o = std::get_if<Overlap>(&hit)) {
      ts.push_back(dot(o->segment.a - s.a, d) / dot(d, d));
      ts.push_back(dot(o->segment.b - s.a, d) / dot(d, d));
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Rational> probes = ts;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) probes.push_back((ts[i] + ts[i + 1]) / 2);
  for (const Rational& t : probes)
    if (locate_point(s.a + t * d, q) == Location::inside) return true;
  return false;
}

// Minimum cover by brute force over subsets of pair-spanned lines, with one
// extra line per point left uncovered.
std::size_t min_cover_oracle(const std::vector<Point>& pts) {
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Line l = Line::through(pts[i], pts[j]);
      std::uint64_t m = 0;
      for (std::size_t k = 0; k < pts.size(); ++k)
        if (l.contains(pts[k])) m |= std::uint64_t{1} << k;
      if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
    }
  const std::uint64_t all = (std::uint64_t{1} << pts.size()) - 1;
  std::size_t best = pts.size();
  std::function<void(std::size_t, std::uint64_t, std::size_t)> rec = [&](std::size_t from, std::uint64_t cov,
                                                                        std::size_t used) {
    best = std::min(best, used + static_cast<std::size_t>(std::popcount(all & ~cov)));
    if (used + 1 >= best) return;
    for (std::size_t i = from; i < masks.size(); ++i) rec(i + 1, cov | masks[i], used + 1);
  };
  rec(0, 0, 0);
  return best;
}

}  // namespace

TEST(Crossings, Examples) {
  Arrangement general({Line(1, 0, 0), Line(0, 1, 0), Line(1, 1, 5)});
  EXPECT_EQ(crossings(general).size(), 3u);
  std::vector<Line> par;
  for (long k = 0; k < 5; ++k) par.push_back(Line::horizontal(k));
  EXPECT_TRUE(crossings(Arrangement(par)).empty());
  Arrangement concurrent({Line(1, 0, 0), Line(0, 1, 0), Line(1, -1, 0)});
  EXPECT_EQ(crossings(concurrent).size(), 1u);
  EXPECT_THROW(Arrangement({Line(1, 0, 0), Line(2, 0, 0)}), std::invalid_argument);
}

TEST(Crossings, CountBoundedByPairs) {
  random::Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    std::vector<Line> lines;
    const auto l = static_cast<std::size_t>(random::uniform_int(rng, 1, 6));
    while (lines.size() < l) {
      Point p = random::random_point_in_box(rng, 3), q = random::random_point_in_box(rng, 3);
      if (p == q) continue;
      Line cand = Line::through(p, q);
      if (std::find(lines.begin(), lines.end(), cand) == lines.end()) lines.push_back(cand);
    }
    Arrangement arr(lines);
    bool general = true;
    for (std::size_t a = 0; a < l; ++a)
      for (std::size_t b = a + 1; b < l; ++b) {
        if (parallel(lines[a], lines[b])) general = false;
        for (std::size_t c = b + 1; c < l; ++c) {
          auto x = intersect(lines[a], lines[b]);
          if (x && lines[c].contains(*x)) general = false;
        }
      }
    const std::size_t pairs = l * (l - 1) / 2;
    EXPECT_LE(crossings(arr).size(), pairs);
    EXPECT_EQ(crossings(arr).size() == pairs, general);
  }
}

TEST(ClipArrangement, Examples) {
  const Polygon sq = square(0, 1);
  // both lines meet the square, crossing at (3, -1)
  Arrangement two({Line::through({3, -1}, {0, make_rational(1, 2)}), Line::through({3, -1}, {make_rational(1, 2), 1})});
  ASSERT_EQ(crossings_inside(two, sq).size(), 0u);
  auto sys = clip_arrangement(two, sq);
  EXPECT_EQ(sys.size(), 2u);
  EXPECT_LE(sys.size(), 2u * 2u);
  Arrangement far({Line::horizontal(7), Line::vertical(-3)});
  EXPECT_EQ(clip_arrangement(far, sq).size(), 0u);
}

TEST(ClipArrangement, RandomInstancesRespectBound) {
  random::Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    const std::size_t p = 3 + static_cast<std::size_t>(i % 10);
    Polygon poly = random::simple_polygon(rng, p);
    Arrangement arr = random::arrangement_avoiding(rng, poly, 1 + static_cast<std::size_t>(i % 6));
    ASSERT_TRUE(crossings_inside(arr, poly).empty());
    auto sys = clip_arrangement(arr, poly);
    std::size_t per_line = 0;
    for (const Line& l : arr.lines()) per_line += clip_line_to_polygon(l, poly).size();
    EXPECT_EQ(sys.size(), per_line);
    EXPECT_LE(sys.size(), arr.size() * (p / 2));
  }
}

TEST(RegionDecomposition, SingleChordOfSquare) {
  auto dec = region_decomposition(Arrangement({Line::horizontal(make_rational(1, 2))}), square(0, 1));
  EXPECT_EQ(dec.regions.size(), 2u);
  ASSERT_EQ(dec.adjacencies.size(), 1u);
}

TEST(RegionDecomposition, ParallelChordsFormPath) {
  auto dec = region_decomposition(Arrangement({Line::horizontal(1), Line::horizontal(2)}), square(0, 3));
  ASSERT_EQ(dec.regions.size(), 3u);
  ASSERT_EQ(dec.adjacencies.size(), 2u);
  std::vector<int> degree(3, 0);
  for (const auto& a : dec.adjacencies) {
    ++degree[a.first];
    ++degree[a.second];
  }
  std::sort(degree.begin(), degree.end());
  EXPECT_EQ(degree, (std::vector<int>{1, 1, 2}));
}

TEST(RegionDecomposition, RejectsInteriorCrossing) {
  Arrangement cross({Line::horizontal(1), Line::vertical(1)});
  EXPECT_THROW(region_decomposition(cross, square(0, 2)), CrossingInsideError);
}

TEST(RegionDecomposition, RandomInstancesFormPartitionTree) {
  random::Rng rng(4242);
  int multi = 0;
  for (int i = 0; i < 150; ++i) {
    Polygon poly = random::simple_polygon(rng, 3 + static_cast<std::size_t>(i % 10), 200);
    Arrangement arr = random::arrangement_avoiding(rng, poly, 1 + static_cast<std::size_t>(i % 6), 200);
    auto dec = region_decomposition(arr, poly);
    const std::size_t k = dec.system.size();
    ASSERT_EQ(dec.regions.size(), k + 1);
    ASSERT_EQ(dec.adjacencies.size(), k);
    multi += k >= 2;

    // partition: areas add up and every chord separates exactly two regions
    Rational area = 0;
    for (const Polygon& r : dec.regions) {
      EXPECT_TRUE(polygon_is_simple(r));
      area += abs(r.signed_area2());
    }
    EXPECT_EQ(area, abs(poly.signed_area2()));
    for (std::size_t s = 0; s < k; ++s) {
      const Point m = dec.system.segments[s].segment.midpoint();
      std::vector<std::size_t> touching;
      for (std::size_t r = 0; r < dec.regions.size(); ++r)
        if (locate_point(m, dec.regions[r]) == Location::boundary) touching.push_back(r);
      ASSERT_EQ(touching.size(), 2u);
      const auto& adj = dec.adjacencies[s];
      EXPECT_EQ(std::min(adj.first, adj.second), touching[0]);
      EXPECT_EQ(std::max(adj.first, adj.second), touching[1]);
    }
    // connected with k edges on k+1 nodes: a tree
    std::vector<std::size_t> parent(k + 1);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& a : dec.adjacencies) parent[find_root(parent, a.first)] = find_root(parent, a.second);
    for (std::size_t r = 0; r <= k; ++r) EXPECT_EQ(find_root(parent, r), find_root(parent, 0));
  }
  EXPECT_GT(multi, 30);
}

TEST(FreeSegments, InnerQuadOnOuterChords) {
  auto sys = clip_arrangement(Arrangement({Line::horizontal(1), Line::horizontal(3), Line::horizontal(5)}), square(0, 6));
  Polygon q({{2, 1}, {4, 1}, {4, 5}, {2, 5}});
  auto freed = free_segments(sys, q);
  ASSERT_EQ(freed.size(), 2u);
  for (const auto& s : freed) EXPECT_FALSE(closure_meets_interior_oracle(s.segment, q));
  EXPECT_EQ(freed[0].line, 0u);
  EXPECT_EQ(freed[1].line, 2u);
}

TEST(FreeSegments, InnerHuggingLeafRegion) {
  auto sys = clip_arrangement(Arrangement({Line::horizontal(1), Line::horizontal(3), Line::horizontal(5)}), square(0, 6));
  Polygon q({{1, 3}, {5, 3}, {5, 5}, {1, 5}});
  auto freed = free_segments(sys, q);
  std::vector<std::size_t> lines;
  for (const auto& s : freed) {
    EXPECT_FALSE(closure_meets_interior_oracle(s.segment, q));
    lines.push_back(s.line);
  }
  EXPECT_EQ(lines, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(FreeSegments, TwoSegmentSystem) {
  auto sys = clip_arrangement(Arrangement({Line::horizontal(2), Line::horizontal(4)}), square(0, 6));
  Polygon q({{1, 2}, {5, 2}, {5, 4}, {1, 4}});
  auto freed = free_segments(sys, q);
  std::size_t expected = 0;
  for (const auto& s : sys.segments) expected += !closure_meets_interior_oracle(s.segment, q);
  EXPECT_EQ(freed.size(), expected);
  EXPECT_EQ(freed.size(), 2u);
}

TEST(FreeSegments, PreconditionViolations) {
  auto sys = clip_arrangement(Arrangement({Line::horizontal(2), Line::horizontal(4)}), square(0, 6));
  EXPECT_THROW(free_segments(sys, Polygon({{1, 2}, {5, 2}, {5, 3}})), PreconditionError);
  // vertices on segments but the top edge leaves the host through its notch
  auto notched = clip_arrangement(Arrangement({Line::horizontal(1), Line::horizontal(5)}),
                                  Polygon({{0, 0}, {6, 0}, {6, 6}, {3, 4}, {0, 6}}));
  ASSERT_EQ(notched.size(), 3u);
  EXPECT_THROW(free_segments(notched, Polygon({{1, 1}, {5, 1}, {5, 5}, {1, 5}})), PreconditionError);
}

TEST(FreeSegments, RandomInstancesKeepTwoFree) {
  random::Rng rng(77);
  int done = 0;
  for (int i = 0; i < 400 && done < 80; ++i) {
    auto inst = random::free_segment_instance(rng, 4 + static_cast<std::size_t>(i % 9), 2 + static_cast<std::size_t>(i % 5));
    if (!inst) continue;
    ++done;
    auto freed = free_segments(inst->system, inst->inner);
    EXPECT_GE(freed.size(), 2u);
    std::size_t expected = 0;
    for (const auto& s : inst->system.segments) expected += !closure_meets_interior_oracle(s.segment, inst->inner);
    EXPECT_EQ(freed.size(), expected);
  }
  EXPECT_GE(done, 40);
}

TEST(MinLineCover, Examples) {
  auto one = min_line_cover({{0, 0}, {1, 1}, {2, 2}}, 1);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->size(), 1u);

  std::vector<Point> general{{0, 0}, {1, 3}, {4, 1}, {6, 5}, {2, 7}};
  ASSERT_EQ(min_cover_oracle(general), 3u);
  auto three = min_line_cover(general, 3);
  ASSERT_TRUE(three);
  EXPECT_EQ(three->size(), 3u);
  EXPECT_FALSE(min_line_cover(general, 2));

  std::vector<Point> grid;
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y) grid.emplace_back(x, y);
  ASSERT_EQ(min_cover_oracle(grid), 3u);
  auto g = min_line_cover(grid, 3);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->size(), 3u);
}

TEST(MinLineCover, Limits) {
  EXPECT_THROW(min_line_cover({{0, 0}}, 9), std::invalid_argument);
  EXPECT_THROW(min_line_cover({{0, 0}}, 0), std::invalid_argument);
  std::vector<Point> many;
  for (long i = 0; i < 65; ++i) many.emplace_back(i, i * i);
  EXPECT_THROW(min_line_cover(many, 8), std::invalid_argument);
  EXPECT_EQ(min_line_cover({}, 1)->size(), 0u);
}

TEST(MinLineCover, MatchesExhaustiveOracle) {
  random::Rng rng(13);
  for (int i = 0; i < 60; ++i) {
    std::vector<Point> pts;
    const auto n = random::uniform_int(rng, 1, 10);
    while (static_cast<long>(pts.size()) < n) {
      Point p(random::uniform_int(rng, 0, 3), random::uniform_int(rng, 0, 3));
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    const std::size_t expected = min_cover_oracle(pts);
    auto cover = min_line_cover(pts, 8);
    ASSERT_TRUE(cover);
    EXPECT_EQ(cover->size(), expected);
    for (const Point& p : pts)
      EXPECT_TRUE(std::any_of(cover->begin(), cover->end(), [&](const Line& l) { return l.contains(p); }));
  }
}
