#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linecover/drawing.hpp"
#include "linecover/embedding.hpp"
#include "linecover/graph.hpp"
#include "linecover/layout.hpp"
#include "linecover/sp.hpp"

namespace linecover {

enum class Family { cubic, series_parallel, apex_tree };

struct FamilyParameters {
  int ell = 0;
  Family family = Family::cubic;
  std::size_t subunits = 0;  // cubic
  std::size_t depth = 0;     // cubic: hexagons per subunit
  int i = 0, j = 0;          // series-parallel and apex-tree indices
};

inline std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

inline FamilyParameters required_parameters(int ell, Family family) {
  if (ell < 1) throw std::invalid_argument("required_parameters: ell must be positive");
  FamilyParameters p;
  p.ell = ell;
  p.family = family;
  const std::size_t crossings = choose2(static_cast<std::size_t>(ell));
  const int half_up = (3 * ell + 1) / 2;  // ceil(3 ell / 2)
  if (family == Family::cubic) {
    p.subunits = crossings + 2;
    p.depth = static_cast<std::size_t>(half_up + 2);
    return p;
  }
  while ((std::size_t{1} << p.j) < crossings + 2) ++p.j;
  // i - j >= 3 ell / 2 + 2, or i - j - 1 > 2 ell
  p.i = family == Family::series_parallel ? p.j + half_up + 2 : p.j + 2 * ell + 2;
  return p;
}

enum class Role { hexagon, egg, frame, terminal, internal, apex, subdivision, leaf, tree_node };

inline const char* to_string(Role r) {
  switch (r) {
    case Role::hexagon: return "hexagon";
    case Role::egg: return "egg";
    case Role::frame: return "frame";
    case Role::terminal: return "terminal";
    case Role::internal: return "internal";
    case Role::apex: return "apex";
    case Role::subdivision: return "subdivision";
    case Role::leaf: return "leaf";
    case Role::tree_node: return "tree";
  }
  return "?";
}

struct VertexRole {
  Role role = Role::frame;
  int subunit = -1;  // hexagon and egg vertices
  int level = -1;    // hexagon index, 0 outermost
  int index = -1;    // position on the hexagon
};

/// One nested-hexagon block: hexagons from outermost to innermost, each as a
/// cycle of six vertices, and the central egg vertex.
struct Subunit {
  std::vector<std::array<std::size_t, 6>> hexagons;
  std::size_t egg = 0;
};

struct ConstructedGraph {
  Graph graph;
  Embedding embedding;
  Drawing drawing;
  std::string family;
  FamilyParameters parameters;
  std::vector<VertexRole> roles;
  std::vector<Subunit> subunits;
  std::size_t frame_vertices = 0;
  std::optional<SPExpression> expression;
};

enum class Variant { hexgrid, zigzag };

/// Both variants have at most this many times ell^3 vertices. The worst case
/// is ell = 1 (76 vertices); the ratio falls towards 4.5 as ell grows.
inline constexpr std::size_t cubic_vertex_constant = 76;

namespace detail {

// Rational approximation of the point at angle 2*pi*k/count on the unit
// circle, stretched by (sx, sy).
inline Point ring_point(std::size_t k, std::size_t count, const Rational& sx, const Rational& sy) {
  const double a = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
  const long den = 1 << 20;
  return Point(sx * Rational(std::lround(std::cos(a) * den), den), sy * Rational(std::lround(std::sin(a) * den), den));
}

struct Host {
  Graph graph;
  Drawing drawing;
  std::vector<std::size_t> substitutable;  // in substitution order
};

// Honeycomb annulus: rings of 2k vertices, spokes between consecutive rings
// at alternating positions, and each innermost/outermost group of three free
// vertices closed off by one cap vertex.
inline Host honeycomb_annulus(std::size_t need) {
  std::size_t m = 2;
  while (9 * m * m < need) ++m;
  const std::size_t k = 3 * m, size = 2 * k;
  const std::size_t rings = 1 + (need + k - 1) / k;
  Host h;
  h.graph = Graph(rings * size);
  auto id = [&](std::size_t ring, std::size_t j) { return ring * size + j % size; };
  for (std::size_t t = 0; t < rings; ++t) {
    const Rational radius(static_cast<long>(rings - t + 1));
    for (std::size_t j = 0; j < size; ++j) {
      h.drawing.position.push_back(ring_point(j, size, radius, radius));
      h.graph.add_edge(id(t, j), id(t, j + 1));
      if (t + 1 < rings && j % 2 == t % 2) h.graph.add_edge(id(t, j), id(t + 1, j));
    }
  }
  // inner cap vertices sit halfway to the centre, outer ones at three times the radius
  auto cap = [&](std::size_t ring, std::size_t parity, const Rational& scale) {
    for (std::size_t g = 0; g < m; ++g) {
      const std::size_t first = 6 * g + parity;
      const std::size_t c = h.graph.add_vertex();
      const Point& mid = h.drawing.position[id(ring, first + 2)];
      h.drawing.position.push_back(Point(mid.x * scale, mid.y * scale));
      for (std::size_t q = 0; q < 3; ++q) h.graph.add_edge(c, id(ring, first + 2 * q));
    }
  };
  cap(rings - 1, (rings - 1) % 2, Rational(1, 2));
  cap(0, 1, Rational(3));
  for (std::size_t t = 1; t < rings; ++t)
    for (std::size_t j = 0; j < size; ++j)
      if (j % 2 == (t - 1) % 2) h.substitutable.push_back(id(t, j));
  return h;
}

// Prism over an even cycle drawn as two concentric ellipses four times as
// wide as they are tall; every
// other inner vertex is substitutable.
inline Host flat_prism(std::size_t need) {
  const std::size_t size = std::max<std::size_t>(4, 2 * need);
  Host h;
  h.graph = Graph(2 * size);
  const Rational w(static_cast<long>(size)), height(static_cast<long>(size / 4));
  for (std::size_t j = 0; j < size; ++j) h.drawing.position.push_back(ring_point(j, size, w, height));
  for (std::size_t j = 0; j < size; ++j) {
    const Point& p = h.drawing.position[j];
    h.drawing.position.push_back(Point(p.x * 2, p.y * 2));
  }
  for (std::size_t j = 0; j < size; ++j) {
    h.graph.add_edge(j, (j + 1) % size);
    h.graph.add_edge(size + j, size + (j + 1) % size);
    h.graph.add_edge(j, size + j);
  }
  for (std::size_t j = 0; j < size; j += 2) h.substitutable.push_back(j);
  return h;
}

// Multiplies by 2^shift and rounds to the nearest integer point. Returns
// false, leaving d untouched, when a coordinate would leave the range of the
// integer fast path.
inline bool snap_to_grid(Drawing& d, int shift) {
  std::vector<Point> out;
  out.reserve(d.position.size());
  mpz_class scale(1), value;
  scale <<= shift;
  const mpz_class limit = mpz_class(1) << 40;
  auto round = [&](const Rational& c) {
    const Rational v = c * Rational(scale) + Rational(1, 2);
    mpz_fdiv_q(value.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return Rational(value);
  };
  for (const Point& p : d.position) {
    Point q(round(p.x), round(p.y));
    if (abs(q.x.get_num()) > limit || abs(q.y.get_num()) > limit) return false;
    out.push_back(q);
  }
  d.position = std::move(out);
  return true;
}

// Local subunit coordinates: hexagon t has vertices (r - t) * dir[k].
inline const std::array<Point, 6>& hex_directions() {
  static const std::array<Point, 6> d{Point(1, 0), Point(1, 1), Point(0, 1), Point(-1, 0), Point(-1, -1), Point(0, -1)};
  return d;
}

}  // namespace detail

/// Cubic bipartite 3-connected planar graph made of C(ell,2)+2 nested-hexagon
/// subunits. Each subunit replaces one vertex of a cubic bipartite host graph
/// and is drawn as an affine image shrunk into a small neighbourhood of that
/// vertex, so its three port edges run along the host edges.
inline ConstructedGraph build_counterexample(int ell, Variant variant) {
  const FamilyParameters params = required_parameters(ell, Family::cubic);
  const std::size_t r = params.depth;
  detail::Host host = variant == Variant::hexgrid ? detail::honeycomb_annulus(params.subunits)
                                                  : detail::flat_prism(params.subunits);
  const Graph& hg = host.graph;
  const std::size_t hn = hg.vertex_count();
  const Embedding hemb = embedding_from_drawing(hg, host.drawing);

  std::vector<int> unit_of(hn, -1);
  for (std::size_t q = 0; q < params.subunits; ++q) unit_of[host.substitutable[q]] = static_cast<int>(q);

  ConstructedGraph out;
  out.family = variant == Variant::hexgrid ? "cubic-hexgrid" : "cubic-zigzag";
  out.parameters = params;
  Graph& g = out.graph;

  // host vertex -> its vertex in g (frame) ; subunit ports per host edge
  std::vector<std::size_t> frame_id(hn, 0);
  std::vector<std::map<std::size_t, std::size_t>> port(hn);
  struct LocalMap {
    Point origin, col0, col1;
  };
  std::vector<LocalMap> maps(params.subunits);
  std::vector<std::vector<std::size_t>> local_vertices(params.subunits);

  for (std::size_t v = 0; v < hn; ++v) {
    if (unit_of[v] < 0) {
      frame_id[v] = g.add_vertex();
      out.roles.push_back({Role::frame});
      ++out.frame_vertices;
      continue;
    }
    const int u = unit_of[v];
    Subunit unit;
    for (std::size_t t = 0; t < r; ++t) {
      std::array<std::size_t, 6> hex{};
      for (std::size_t k = 0; k < 6; ++k) {
        hex[k] = g.add_vertex();
        out.roles.push_back({Role::hexagon, u, static_cast<int>(t), static_cast<int>(k)});
        local_vertices[u].push_back(hex[k]);
      }
      for (std::size_t k = 0; k < 6; ++k) g.add_edge(hex[k], hex[(k + 1) % 6]);
      if (t > 0)
        for (std::size_t k = (t - 1) % 2; k < 6; k += 2) g.add_edge(unit.hexagons.back()[k], hex[k]);
      unit.hexagons.push_back(hex);
    }
    unit.egg = g.add_vertex();
    out.roles.push_back({Role::egg, u});
    local_vertices[u].push_back(unit.egg);
    for (std::size_t k = (r - 1) % 2; k < 6; k += 2) g.add_edge(unit.egg, unit.hexagons.back()[k]);

    // ports are the outer hexagon's odd vertices in ccw order; match them to
    // the host rotation a, b, c with alpha*ua + beta*ub + uc = 0
    const auto& rot = hemb.rotation()[v];
    if (rot.size() != 3) throw std::logic_error("host vertex is not cubic");
    const Point& pv = host.drawing.position[v];
    const Point ua = host.drawing.position[rot[0]] - pv, ub = host.drawing.position[rot[1]] - pv,
                uc = host.drawing.position[rot[2]] - pv;
    const Rational det = cross(ua, ub);
    const Rational alpha = cross(ub, uc) / det, beta = cross(uc, ua) / det;
    if (det == 0 || alpha <= 0 || beta <= 0) throw std::logic_error("host edges do not surround a substituted vertex");
    // normalised so that no port lands further out than the host edge allows
    const Rational damp = 1 / std::max({alpha, beta, Rational(1)});
    maps[u] = {pv, Point(-damp * beta * ub.x, -damp * beta * ub.y),
               Point(damp * (alpha * ua.x + beta * ub.x), damp * (alpha * ua.y + beta * ub.y))};
    port[v][rot[0]] = unit.hexagons[0][1];
    port[v][rot[1]] = unit.hexagons[0][3];
    port[v][rot[2]] = unit.hexagons[0][5];
    out.subunits.push_back(std::move(unit));
  }
  auto endpoint = [&](std::size_t v, std::size_t w) { return unit_of[v] < 0 ? frame_id[v] : port[v].at(w); };
  for (const auto& [a, b] : hg.edges()) g.add_edge(endpoint(a, b), endpoint(b, a));

  // smallest image of a unit step in any subunit, before scaling
  double feature = std::numeric_limits<double>::infinity();
  for (const auto& mp : maps)
    for (const Point& q : {mp.col0, mp.col1, mp.col0 + mp.col1})
      feature = std::min(feature, std::max(std::abs(q.x.get_d()), std::abs(q.y.get_d())));

  // shrink subunits until the drawing is planar, then snap it to an integer
  // grid fine enough to keep every subunit step at least 32 units long
  Rational sigma(1, static_cast<long>(4 * r));
  for (int attempt = 0; attempt < 40; ++attempt, sigma /= 2) {
    Drawing d;
    d.position.assign(g.vertex_count(), Point());
    for (std::size_t v = 0; v < hn; ++v)
      if (unit_of[v] < 0) d.position[frame_id[v]] = host.drawing.position[v];
    for (std::size_t u = 0; u < params.subunits; ++u) {
      const auto& mp = maps[u];
      const auto& unit = out.subunits[u];
      auto put = [&](std::size_t vert, const Point& local) {
        d.position[vert] = Point(mp.origin.x + sigma * (mp.col0.x * local.x + mp.col1.x * local.y),
                                 mp.origin.y + sigma * (mp.col0.y * local.x + mp.col1.y * local.y));
      };
      for (std::size_t t = 0; t < r; ++t) {
        const Rational radius(static_cast<long>(r - t));
        for (std::size_t k = 0; k < 6; ++k) {
          const Point& dir = detail::hex_directions()[k];
          put(unit.hexagons[t][k], Point(dir.x * radius, dir.y * radius));
        }
      }
      put(unit.egg, Point(0, 0));
    }
    const int shift = std::max(0, static_cast<int>(std::ceil(std::log2(32 / (sigma.get_d() * feature)))));
    if (detail::snap_to_grid(d, shift) && verify_drawing(g, d, 0, 1).planar) {
      out.drawing = std::move(d);
      out.embedding = embedding_from_drawing(g, out.drawing);
      return out;
    }
  }
  throw std::logic_error("build_counterexample: could not find a planar scale");
}

inline ConstructedGraph from_expression(SPExpression e, std::string family, FamilyParameters params) {
  SPRealization real = realize(e);
  ConstructedGraph out;
  out.graph = real.graph;
  out.family = std::move(family);
  out.parameters = params;
  out.drawing = sp_reference_drawing(real);
  out.embedding = embedding_from_drawing(out.graph, out.drawing);
  out.roles.assign(out.graph.vertex_count(), {Role::internal});
  out.roles[real.s].role = out.roles[real.t].role = Role::terminal;
  out.expression = std::move(e);
  return out;
}

inline SPExpression a_expression(int i);

/// B_i: two copies of A_i, each between two edges, in parallel.
inline SPExpression b_expression(int i) {
  using E = SPExpression;
  auto arm = [&] { return E::series({E::edge(), a_expression(i), E::edge()}); };
  return E::parallel({arm(), arm()});
}

/// A_1 is one edge; A_i is an edge in parallel with B_{i-1} between two edges.
inline SPExpression a_expression(int i) {
  using E = SPExpression;
  if (i < 1) throw std::invalid_argument("series-parallel index must be positive");
  if (i == 1) return E::edge();
  return E::parallel({E::edge(), E::series({E::edge(), b_expression(i - 1), E::edge()})});
}

enum class SPKind { A, B };

inline ConstructedGraph build_series_parallel(int i, SPKind kind) {
  if (i < 1) throw std::invalid_argument("build_series_parallel: i must be positive");
  FamilyParameters p;
  p.family = Family::series_parallel;
  p.i = i;
  return from_expression(kind == SPKind::A ? a_expression(i) : b_expression(i), kind == SPKind::A ? "A" : "B", p);
}

/// Apex-tree over a complete binary tree of height i, written as a
/// two-terminal expression between the tree root and the apex.
inline SPExpression apex_tree_expression(int height) {
  using E = SPExpression;
  if (height < 1) throw std::invalid_argument("apex tree height must be positive");
  // subtree rooted at depth d, as a graph between its root and the apex
  auto below = [&](auto&& self, int d) -> SPExpression {
    if (d == height) return E::edge();
    auto branch = [&] {
      if (d + 1 == height) return E::series({E::edge(), E::edge()});
      return E::series({E::edge(), E::parallel({E::edge(), E::series({E::edge(), self(self, d + 1)})})});
    };
    return E::parallel({branch(), branch()});
  };
  return below(below, 0);
}

inline ConstructedGraph build_apex_tree(int height) {
  SPExpression e = apex_tree_expression(height);
  SPRealization real = realize(e);
  FamilyParameters p;
  p.family = Family::apex_tree;
  p.i = height;
  ConstructedGraph out;
  out.graph = real.graph;
  out.family = "apex-tree";
  out.parameters = p;
  out.expression = e;
  const Graph& g = out.graph;
  const std::size_t n = g.vertex_count(), apex = real.t, root = real.s;

  out.roles.assign(n, {Role::tree_node});
  out.roles[apex].role = Role::apex;
  for (std::size_t w : g.neighbors(apex)) out.roles[w].role = g.degree(w) == 2 ? Role::leaf : Role::subdivision;

  // heavy-path drawing of the subdivided tree, apex last
  std::vector<std::size_t> to_tree(n), from_tree;
  for (std::size_t v = 0; v < n; ++v)
    if (v != apex) {
      to_tree[v] = from_tree.size();
      from_tree.push_back(v);
    }
  Graph tree(n - 1);
  for (const auto& [u, v] : g.edges())
    if (u != apex && v != apex) tree.add_edge(to_tree[u], to_tree[v]);
  std::vector<std::size_t> hooks;
  for (std::size_t w : g.neighbors(apex)) hooks.push_back(to_tree[w]);
  ApexTreeDrawing at = draw_apex_tree(tree, to_tree[root], hooks);
  out.drawing.position.assign(n, Point());
  for (std::size_t q = 0; q < from_tree.size(); ++q) out.drawing.position[from_tree[q]] = at.drawing.position[q];
  out.drawing.position[apex] = at.drawing.position[at.apex];
  out.embedding = embedding_from_drawing(g, out.drawing);
  return out;
}

}  // namespace linecover
