#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linecover/drawing.hpp"
#include "linecover/embedding.hpp"
#include "linecover/graph.hpp"
#include "linecover/nests.hpp"

namespace linecover {

struct HeavyPathDecomposition {
  std::size_t root = 0;
  std::vector<std::size_t> parent;                    // parent[root] == root
  std::vector<std::optional<std::size_t>> heavy_child;  // unset at leaves
  std::vector<std::size_t> subtree_size;
  std::vector<std::size_t> light_depth;                // non-heavy edges up to the root
  std::vector<std::vector<std::size_t>> paths;         // each listed top to bottom
};

namespace detail {

inline void require_tree(const Graph& tree, std::size_t root) {
  const std::size_t n = tree.vertex_count();
  if (n == 0) throw std::invalid_argument("tree: empty graph");
  if (root >= n) throw std::invalid_argument("tree: root out of range");
  if (tree.edge_count() != n - 1 || !connected_without(tree, std::vector<char>(n, 0)))
    throw std::invalid_argument("tree: input is not a tree");
}

}  // namespace detail

/// Heavy edge to the child with the largest subtree; ties go to the lowest
/// vertex index.
inline HeavyPathDecomposition heavy_path_decomposition(const Graph& tree, std::size_t root) {
  detail::require_tree(tree, root);
  const std::size_t n = tree.vertex_count();
  HeavyPathDecomposition h;
  h.root = root;
  h.parent.assign(n, n);
  h.heavy_child.assign(n, std::nullopt);
  h.subtree_size.assign(n, 1);
  h.light_depth.assign(n, 0);

  std::vector<std::size_t> order{root};
  h.parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t w : tree.neighbors(order[i]))
      if (h.parent[w] == n) {
        h.parent[w] = order[i];
        order.push_back(w);
      }
  for (std::size_t i = order.size(); i-- > 1;) h.subtree_size[h.parent[order[i]]] += h.subtree_size[order[i]];
  for (std::size_t v : order) {
    for (std::size_t w : tree.neighbors(v)) {
      if (w == h.parent[v] && v != root) continue;
      auto& best = h.heavy_child[v];
      if (!best || h.subtree_size[w] > h.subtree_size[*best] ||
          (h.subtree_size[w] == h.subtree_size[*best] && w < *best))
        best = w;
    }
  }
  for (std::size_t v : order) {
    if (v == root) continue;
    const std::size_t p = h.parent[v];
    h.light_depth[v] = h.light_depth[p] + (h.heavy_child[p] == v ? 0 : 1);
  }
  for (std::size_t v : order) {
    if (v != root && h.heavy_child[h.parent[v]] == v) continue;
    std::vector<std::size_t> path{v};
    while (h.heavy_child[path.back()]) path.push_back(*h.heavy_child[path.back()]);
    h.paths.push_back(std::move(path));
  }
  return h;
}

struct ApexTreeDrawing {
  Graph graph;  // tree edges plus apex edges; the apex is the last vertex
  Drawing drawing;
  std::size_t apex = 0;
};

/// Tree vertex at (preorder position, light depth) with light children
/// visited before the heavy child; apex n+1 above the upper right corner.
inline ApexTreeDrawing draw_apex_tree(const Graph& tree, std::size_t root, const std::vector<std::size_t>& apex_neighbors) {
  const HeavyPathDecomposition h = heavy_path_decomposition(tree, root);
  const std::size_t n = tree.vertex_count();
  for (std::size_t v : apex_neighbors)
    if (v >= n) throw std::invalid_argument("draw_apex_tree: apex neighbour out of range");

  ApexTreeDrawing out;
  out.graph = tree;
  out.apex = out.graph.add_vertex();
  for (std::size_t v : apex_neighbors)
    if (!out.graph.has_edge(v, out.apex)) out.graph.add_edge(v, out.apex);

  out.drawing.position.assign(n + 1, Point());
  std::vector<std::size_t> stack{root};
  long x = 0, ymax = 0;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    const long y = static_cast<long>(h.light_depth[v]);
    out.drawing.position[v] = Point(++x, y);
    ymax = std::max(ymax, y);
    // pushed so that light children pop first in index order, heavy child last
    if (h.heavy_child[v]) stack.push_back(*h.heavy_child[v]);
    std::vector<std::size_t> light;
    for (std::size_t w : tree.neighbors(v))
      if (w != h.parent[v] && h.heavy_child[v] != w) light.push_back(w);
    std::sort(light.rbegin(), light.rend());
    stack.insert(stack.end(), light.begin(), light.end());
  }
  const long nn = static_cast<long>(n);
  out.drawing.position[out.apex] = Point(nn, ymax + nn + 1);
  return out;
}

/// Nested hexagons on the horizontal lines y = 0 .. ell-1. Hexagon t has its
/// bottom edge on line t, its top edge on line ell-1-t and its two side
/// corners on the middle line, where the egg sits.
inline std::pair<NestSpec, Arrangement> draw_parallel_hexnest(int ell) {
  if (ell < 3) throw std::invalid_argument("draw_parallel_hexnest: need at least 3 lines");
  const long m = (ell - 1) / 2, r = m, top = ell - 1;
  NestSpec spec;
  spec.egg = Point(0, m);
  for (long t = 0; t < r; ++t) {
    const long u = r - t, w = r - t + 1;
    spec.polygons.emplace_back(std::vector<Point>{
        Point(-u, t), Point(u, t), Point(w, m), Point(u, top - t), Point(-u, top - t), Point(-w, m)});
  }
  std::vector<Line> lines;
  for (long y = 0; y < ell; ++y) lines.push_back(Line::horizontal(y));
  return {std::move(spec), Arrangement(std::move(lines))};
}

struct HexnestResult {
  NestSpec nest;
  Arrangement arrangement;
  int depth = 0;
  int target = 0;
  bool target_met = false;
  std::string method;
};

inline int fig7_target(int ell) { return (3 * (ell - 1) - 2) / 2; }

/// Nested hexagons shaped like the letter Z on t = ell-2 vertical lines
/// x = 1..t plus two parallel lines through the bends. Every vertical line
/// crosses all three strokes; all crossings sit in the two notches outside
/// the band.
///
/// Level k < t is a Z with tips on x = k+1 (top stroke) and x = t-k (bottom
/// stroke) and its four bend corners on the bend lines. Level t is the
/// diagonal stroke alone, cut off along the bend lines. The remaining levels
/// are convex hexagons in the diagonal with end edges on x = j and
/// x = t+1-j and two side corners on the middle line, where the egg sits.
inline std::pair<NestSpec, Arrangement> draw_zigzag_hexnest(int ell) {
  if (ell < 3) throw std::invalid_argument("draw_zigzag_hexnest: need at least 3 lines");
  const long t = ell - 2, m = (t + 1) / 2;
  const int levels = static_cast<int>((3 * t + 1) / 2);
  const Rational s(1, t + 1);
  const Point c1(t + 1, 1), c2(0, -1), dir(1, s);
  auto width = [&](int k) -> Rational { return Rational(levels + 1 - k, 2 * (levels + 1)); };
  auto centre = [&](const Rational& x) -> Rational { return (x - Rational(t + 1, 2)) * Rational(2, t + 1); };
  auto at = [&](const Rational& x, const Rational& off) -> Point { return Point(x, centre(x) + off); };

  NestSpec spec;
  spec.egg = at(m, 0);
  for (int k = 0; k < levels; ++k) {
    const Rational w = width(k);
    const Point v1 = c1 + w * dir, w1 = c1 - w * dir, v2 = c2 - w * dir, w2 = c2 + w * dir;
    if (k < t) {
      spec.polygons.emplace_back(std::vector<Point>{Point(k + 1, 1), v1, w2, Point(t - k, -1), v2, w1});
      continue;
    }
    const Rational bulge = s * (w + width(k - 1)) / 2;
    if (k == t) {
      spec.polygons.emplace_back(std::vector<Point>{v1, at(m, -bulge), w2, v2, at(m, bulge), w1});
      continue;
    }
    const long j = k - t;
    const Rational half = s * w;
    spec.polygons.emplace_back(std::vector<Point>{at(t + 1 - j, half), at(t + 1 - j, -half), at(m, -bulge),
                                                  at(j, -half), at(j, half), at(m, bulge)});
  }
  std::vector<Line> lines;
  for (long x = 1; x <= t; ++x) lines.push_back(Line::vertical(x));
  lines.push_back(Line::through(c1, c1 + dir));
  lines.push_back(Line::through(c2, c2 + dir));
  return {std::move(spec), Arrangement(std::move(lines))};
}

/// The zigzag nest, falling back to the parallel one if the zigzag fails its
/// own checks.
inline HexnestResult draw_fig7_hexnest(int ell) {
  if (ell < 3) throw std::invalid_argument("draw_fig7_hexnest: need at least 3 lines");
  HexnestResult out;
  out.target = fig7_target(ell);
  auto [spec, arr] = draw_zigzag_hexnest(ell);
  const NestAudit audit = audit_nest_against_arrangement(spec, arr);
  if (verify_nest(spec).valid && audit.feasible && audit.interior_crossings.empty()) {
    out.nest = std::move(spec);
    out.arrangement = std::move(arr);
    out.method = "zigzag";
  } else {
    std::tie(out.nest, out.arrangement) = draw_parallel_hexnest(ell);
    out.method = "parallel";
  }
  out.depth = static_cast<int>(out.nest.polygons.size());
  out.target_met = out.depth >= out.target;
  return out;
}

/// Vertices on numbered levels with a left-to-right order on each level.
struct LeveledDrawing {
  Graph graph;
  std::vector<int> level;                       // per vertex
  std::vector<std::vector<std::size_t>> order;  // per level
};

namespace detail {

inline void require_leveled(const LeveledDrawing& ld) {
  const std::size_t n = ld.graph.vertex_count();
  if (ld.level.size() != n) throw std::invalid_argument("leveled drawing: wrong level count");
  std::vector<long> rank(n, -1);
  for (std::size_t k = 0; k < ld.order.size(); ++k)
    for (std::size_t i = 0; i < ld.order[k].size(); ++i) {
      const std::size_t v = ld.order[k][i];
      if (v >= n || rank[v] >= 0 || ld.level[v] != static_cast<int>(k))
        throw std::invalid_argument("leveled drawing: order does not match levels");
      rank[v] = static_cast<long>(i);
    }
  for (std::size_t v = 0; v < n; ++v)
    if (rank[v] < 0) throw std::invalid_argument("leveled drawing: vertex missing from order");
  // edges between levels k and k+1, as (rank below, rank above)
  std::map<int, std::vector<std::pair<long, long>>> spans;
  for (const auto& [u, v] : ld.graph.edges()) {
    const int du = ld.level[u], dv = ld.level[v];
    if (du == dv) {
      if (std::abs(rank[u] - rank[v]) != 1) throw std::invalid_argument("leveled drawing: same-level edge skips a vertex");
    } else if (std::abs(du - dv) == 1) {
      const bool up = du < dv;
      spans[std::min(du, dv)].emplace_back(up ? rank[u] : rank[v], up ? rank[v] : rank[u]);
    } else {
      throw std::invalid_argument("leveled drawing: edge spans more than one level");
    }
  }
  for (const auto& [k, list] : spans)
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j)
        if ((list[i].first - list[j].first) * (list[i].second - list[j].second) < 0)
          throw std::invalid_argument("leveled drawing: edges cross between levels " + std::to_string(k));
}

}  // namespace detail

inline long spiral_default_base(std::size_t n) { return 4 * static_cast<long>(n + 1); }

/// Puts level k on the ray at angle k*90 degrees, evenly spaced in the
/// radius band [B^k, B^(k+1)), keeping each level's order outward from the
/// centre. B defaults to 4(n+1).
inline Drawing spiral_two_lines(const LeveledDrawing& ld, long base = 0) {
  detail::require_leveled(ld);
  if (base == 0) base = spiral_default_base(ld.graph.vertex_count());
  if (base < 2) throw std::invalid_argument("spiral base must be at least 2");
  const std::array<Point, 4> rays{Point(1, 0), Point(0, 1), Point(-1, 0), Point(0, -1)};
  Drawing d;
  d.position.assign(ld.graph.vertex_count(), Point());
  mpz_class inner(1);
  for (std::size_t k = 0; k < ld.order.size(); ++k, inner *= base) {
    const auto& row = ld.order[k];
    const Rational step(Rational(inner * (base - 1)) / static_cast<long>(std::max<std::size_t>(row.size(), 1)));
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Rational radius = Rational(inner) + step * static_cast<long>(i);
      const Point& dir = rays[k % 4];
      d.position[row[i]] = Point(dir.x * radius, dir.y * radius);
    }
  }
  return d;
}

}  // namespace linecover
