#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "linecover/arrangement.hpp"
#include "linecover/embedding.hpp"
#include "linecover/geom.hpp"
#include "linecover/graph.hpp"

namespace linecover {

enum class NestKind { nest, near_nest };

/// Smallest depth r for which a (p, r)-nest (or near-nest) cannot be drawn
/// with its vertices on ell lines and no crossing inside any polygon.
inline int infeasibility_threshold(int p, int ell, NestKind kind) {
  if (p < 3) throw std::invalid_argument("infeasibility_threshold: p must be at least 3");
  if (ell < 0) throw std::invalid_argument("infeasibility_threshold: negative line count");
  const int segments = ell * (p / 2);
  // nest: 2(r-1) > segments; near-nest: r-1 > segments
  return kind == NestKind::nest ? segments / 2 + 2 : segments + 2;
}

struct NestSpec {
  std::vector<Polygon> polygons;  // outermost first
  Point egg;
};

/// Cycles of a drawn graph, outermost first, with the egg a vertex of the
/// same graph.
struct NearNestSpec {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t egg = 0;
  std::vector<Point> position;  // indexed by vertex; empty when not drawn
};

struct NestCheck {
  bool valid = true;
  std::string violation;  // first violation found
  int polygon = -1;       // first offending polygon, or -1

  static NestCheck fail(std::string what, int index = -1) { return {false, std::move(what), index}; }
};

namespace detail {

inline bool boundaries_meet(const Polygon& a, const Polygon& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (intersects(a.edge(i), b.edge(j))) return true;
  return false;
}

inline std::optional<NestCheck> check_polygons(const std::vector<Polygon>& polys, const Point& egg) {
  if (polys.empty()) return std::nullopt;
  const std::size_t p = polys.front().size();
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const int k = static_cast<int>(i);
    if (polys[i].size() != p) return NestCheck::fail("polygons have different sizes", k);
    if (!polygon_is_simple(polys[i])) return NestCheck::fail("polygon is not simple", k);
    if (locate_point(egg, polys[i]) != Location::inside) return NestCheck::fail("egg is not inside polygon", k);
  }
  return std::nullopt;
}

}  // namespace detail

/// Polygons must be simple p-gons with pairwise disjoint boundaries, each
/// holding the egg strictly inside.
inline NestCheck verify_nest(const NestSpec& spec) {
  if (auto bad = detail::check_polygons(spec.polygons, spec.egg)) return *bad;
  for (std::size_t i = 0; i < spec.polygons.size(); ++i)
    for (std::size_t j = i + 1; j < spec.polygons.size(); ++j)
      if (detail::boundaries_meet(spec.polygons[i], spec.polygons[j]))
        return NestCheck::fail("polygon boundaries meet", static_cast<int>(j));
  return {};
}

namespace detail {

inline std::vector<Edge> cycle_edges(const std::vector<std::size_t>& c) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const std::size_t u = c[i], v = c[(i + 1) % c.size()];
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Edge-disjoint and at most one shared vertex.
inline std::optional<std::string> near_nest_conflict(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  const auto ea = cycle_edges(a), eb = cycle_edges(b);
  std::vector<Edge> common;
  std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(common));
  if (!common.empty()) return "cycles share an edge";
  std::size_t shared = 0;
  for (std::size_t u : a) shared += std::count(b.begin(), b.end(), u);
  if (shared > 1) return "cycles share more than one vertex";
  return std::nullopt;
}

inline std::optional<NestCheck> check_cycle_shapes(const NearNestSpec& spec) {
  for (std::size_t i = 0; i < spec.cycles.size(); ++i) {
    const auto& c = spec.cycles[i];
    const int k = static_cast<int>(i);
    if (c.size() < 3 || c.size() != spec.cycles.front().size()) return NestCheck::fail("cycle has the wrong length", k);
    auto sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return NestCheck::fail("cycle repeats a vertex", k);
    if (std::binary_search(sorted.begin(), sorted.end(), spec.egg)) return NestCheck::fail("egg lies on a cycle", k);
    for (std::size_t j = 0; j < i; ++j)
      if (auto why = near_nest_conflict(spec.cycles[j], c)) return NestCheck::fail(*why, k);
  }
  return std::nullopt;
}

}  // namespace detail

/// Geometric near-nest check on the vertex positions carried by the spec.
inline NestCheck verify_nest(const NearNestSpec& spec) {
  if (auto bad = detail::check_cycle_shapes(spec)) return *bad;
  if (spec.position.empty()) return NestCheck::fail("near-nest has no drawing");
  std::vector<Polygon> polys;
  for (const auto& c : spec.cycles) {
    std::vector<Point> pts;
    for (std::size_t v : c) {
      if (v >= spec.position.size()) return NestCheck::fail("cycle vertex has no position");
      pts.push_back(spec.position[v]);
    }
    try {
      polys.emplace_back(std::move(pts));
    } catch (const std::invalid_argument&) {
      return NestCheck::fail("polygon is degenerate", static_cast<int>(polys.size()));
    }
  }
  if (spec.egg >= spec.position.size()) return NestCheck::fail("egg has no position");
  if (auto bad = detail::check_polygons(polys, spec.position[spec.egg])) return *bad;
  return {};
}

/// Combinatorial near-nest check: the egg must lie on the inner side of
/// every cycle in the embedding.
inline NestCheck verify_nest(const NearNestSpec& spec, const Embedding& emb) {
  if (auto bad = detail::check_cycle_shapes(spec)) return *bad;
  const Graph& g = emb.graph();
  if (spec.egg >= g.vertex_count()) return NestCheck::fail("egg is not a vertex");
  for (std::size_t i = 0; i < spec.cycles.size(); ++i) {
    FaceSides sides;
    try {
      sides = face_inside_relation(emb, spec.cycles[i]);
    } catch (const std::invalid_argument& e) {
      return NestCheck::fail(e.what(), static_cast<int>(i));
    }
    bool inside = false;
    for (std::size_t f : sides.inside)
      for (std::size_t v : emb.faces()[f]) inside = inside || v == spec.egg;
    if (!inside) return NestCheck::fail("egg is not inside cycle", static_cast<int>(i));
  }
  return {};
}

struct NestAudit {
  bool on_lines = false;
  std::string error;
  std::size_t segment_count = 0;   // segments cut from the outermost polygon
  std::size_t segment_bound = 0;   // lines times floor(p/2)
  std::vector<std::size_t> consumed;  // per inner polygon, outermost inner first
  std::size_t remaining = 0;       // segments still meeting the innermost interior
  std::vector<Point> interior_crossings;     // inside the outermost polygon
  std::vector<std::size_t> crossings_per_polygon;
  bool feasible = false;
};

namespace detail {

inline NestAudit audit_polygons(const std::vector<Polygon>& polys, const Point& egg, const Arrangement& arr,
                                std::size_t per_level) {
  NestAudit a;
  if (polys.empty()) {
    a.error = "empty nest";
    return a;
  }
  for (const Polygon& poly : polys)
    for (const Point& v : poly.vertices())
      if (!arr.on_some_line(v)) {
        a.error = "polygon vertex off every line";
        return a;
      }
  if (!arr.on_some_line(egg)) {
    a.error = "egg off every line";
    return a;
  }
  a.on_lines = true;
  a.segment_bound = arr.size() * (polys.front().size() / 2);
  a.interior_crossings = crossings_inside(arr, polys.front());
  for (const Polygon& poly : polys) a.crossings_per_polygon.push_back(crossings_inside(arr, poly).size());
  if (!a.interior_crossings.empty()) return a;

  const SegmentSystem sys = clip_arrangement(arr, polys.front());
  a.segment_count = sys.size();
  std::vector<char> alive(sys.size(), 1);
  bool enough = true;
  for (std::size_t k = 1; k < polys.size(); ++k) {
    std::size_t used = 0;
    for (std::size_t s = 0; s < sys.size(); ++s)
      if (alive[s] && !closed_segment_meets_interior(sys.segments[s].segment, polys[k])) {
        alive[s] = 0;
        ++used;
      }
    a.consumed.push_back(used);
    enough = enough && used >= per_level;
  }
  bool egg_on_live = false;
  for (std::size_t s = 0; s < sys.size(); ++s) {
    a.remaining += alive[s];
    egg_on_live = egg_on_live || (alive[s] && on_segment(egg, sys.segments[s].segment));
  }
  a.feasible = a.segment_count <= a.segment_bound && enough && egg_on_live;
  return a;
}

}  // namespace detail

/// Segment accounting for a nest drawn on an arrangement. Each inner polygon
/// must use up at least two segments cut from the outermost polygon, and the
/// egg must still sit on a live segment.
inline NestAudit audit_nest_against_arrangement(const NestSpec& spec, const Arrangement& arr) {
  return detail::audit_polygons(spec.polygons, spec.egg, arr, 2);
}

/// Near-nest version; each inner cycle must use up at least one segment.
inline NestAudit audit_nest_against_arrangement(const NearNestSpec& spec, const Arrangement& arr) {
  std::vector<Polygon> polys;
  for (const auto& c : spec.cycles) {
    std::vector<Point> pts;
    for (std::size_t v : c) pts.push_back(spec.position.at(v));
    polys.emplace_back(std::move(pts));
  }
  return detail::audit_polygons(polys, spec.position.at(spec.egg), arr, 1);
}

// ---------------------------------------------------------------------------
// Combinatorial search

struct SearchLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All simple cycles of length p, each starting at its smallest vertex and
/// oriented so the second vertex is smaller than the last.
inline std::vector<std::vector<std::size_t>> enumerate_cycles(const Graph& g, std::size_t p, std::size_t limit = 100000) {
  if (p < 3) throw std::invalid_argument("enumerate_cycles: length must be at least 3");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> path;
  std::vector<char> used(g.vertex_count(), 0);
  auto extend = [&](auto&& self, std::size_t start) -> void {
    const std::size_t v = path.back();
    for (std::size_t w : g.neighbors(v)) {
      if (w == start && path.size() == p && path[1] < path.back()) {
        out.push_back(path);
        if (out.size() > limit) throw SearchLimitError("too many cycles");
      }
      if (w <= start || used[w] || path.size() == p) continue;
      used[w] = 1;
      path.push_back(w);
      self(self, start);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    path = {s};
    used[s] = 1;
    extend(extend, s);
    used[s] = 0;
  }
  return out;
}

using VertexSet = boost::dynamic_bitset<>;

/// Vertices strictly on the inner side of a cycle.
inline VertexSet vertices_inside(const Embedding& emb, const std::vector<std::size_t>& cycle) {
  VertexSet in(emb.graph().vertex_count());
  for (std::size_t f : face_inside_relation(emb, cycle).inside)
    for (std::size_t v : emb.faces()[f]) in.set(v);
  for (std::size_t v : cycle) in.reset(v);
  return in;
}

struct Nest {
  std::size_t egg = 0;
  std::vector<std::vector<std::size_t>> cycles;  // outermost first
  std::size_t depth() const { return cycles.size(); }
};

namespace detail {

// Maximum set of pairwise disjoint vertex sets, exact unless the node budget
// runs out.
inline std::vector<std::size_t> max_disjoint(const std::vector<VertexSet>& sets, std::size_t budget = 2000000) {
  const std::size_t k = sets.size();
  std::vector<std::vector<char>> clash(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) clash[i][j] = clash[j][i] = sets[i].intersects(sets[j]);
  std::vector<std::size_t> best, cur;
  std::size_t nodes = 0;
  auto go = [&](auto&& self, std::vector<std::size_t> cand) -> void {
    if (++nodes > budget) return;
    if (cur.size() + cand.size() <= best.size()) return;
    if (cand.empty()) {
      best = cur;
      return;
    }
    const std::size_t v = cand.front();
    std::vector<std::size_t> rest;
    for (std::size_t i = 1; i < cand.size(); ++i)
      if (!clash[v][cand[i]]) rest.push_back(cand[i]);
    cur.push_back(v);
    self(self, rest);
    cur.pop_back();
    self(self, std::vector<std::size_t>(cand.begin() + 1, cand.end()));
  };
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  go(go, all);
  return best;
}

}  // namespace detail

/// Nests of p-cycles in an embedding with a designated outer face. Cycles
/// nest when every vertex of the inner one lies strictly inside the outer
/// one; the egg is any vertex strictly inside the innermost cycle.
class NestCensus {
 public:
  NestCensus(const Embedding& emb, std::vector<std::vector<std::size_t>> cycles) : cycles_(std::move(cycles)) {
    const std::size_t n = emb.graph().vertex_count(), c = cycles_.size();
    for (const auto& cyc : cycles_) {
      inside_.push_back(vertices_inside(emb, cyc));
      VertexSet on(n);
      for (std::size_t v : cyc) on.set(v);
      region_.push_back(on | inside_.back());
    }
    // longest inward chain starting at each cycle, smallest regions first
    std::vector<std::size_t> order(c);
    for (std::size_t i = 0; i < c; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return inside_[a].count() < inside_[b].count(); });
    chain_.assign(c, 0);
    next_.assign(c, c);
    for (std::size_t a : order) {
      if (inside_[a].none()) continue;
      chain_[a] = 1;
      for (std::size_t b : order) {
        if (chain_[b] + 1 <= chain_[a] || !region_[b].is_subset_of(inside_[a])) continue;
        chain_[a] = chain_[b] + 1;
        next_[a] = b;
      }
    }
    n_ = n;
  }

  std::size_t depth() const {
    std::size_t d = 0;
    for (std::size_t x : chain_) d = std::max(d, x);
    return d;
  }

  /// A deepest nest; depth 0 means an egg alone.
  Nest deepest() const {
    std::size_t best = cycles_.size();
    for (std::size_t i = 0; i < cycles_.size(); ++i)
      if (chain_[i] > 0 && (best == cycles_.size() || chain_[i] > chain_[best])) best = i;
    if (best == cycles_.size()) return Nest{};
    return nest_from(best, chain_[best]);
  }

  /// A largest collection of nests of depth at least min_depth whose closed
  /// regions are pairwise vertex-disjoint.
  std::vector<Nest> disjoint(std::size_t min_depth) const {
    if (min_depth == 0) {
      std::vector<Nest> eggs;
      for (std::size_t v = 0; v < n_; ++v) eggs.push_back(Nest{v, {}});
      return eggs;
    }
    std::vector<std::size_t> cand;
    for (std::size_t i = 0; i < cycles_.size(); ++i)
      if (chain_[i] >= min_depth) cand.push_back(i);
    // only inclusion-minimal regions can improve a disjoint packing
    std::vector<std::size_t> minimal;
    std::vector<VertexSet> sets;
    for (std::size_t a : cand) {
      bool keep = true;
      for (std::size_t b : cand)
        if (b != a && region_[b].is_subset_of(region_[a]) && (region_[b] != region_[a] || b < a)) keep = false;
      if (keep) {
        minimal.push_back(a);
        sets.push_back(region_[a]);
      }
    }
    std::vector<Nest> out;
    for (std::size_t k : detail::max_disjoint(sets)) out.push_back(nest_from(minimal[k], min_depth));
    return out;
  }

  const std::vector<std::vector<std::size_t>>& cycles() const { return cycles_; }

 private:
  Nest nest_from(std::size_t top, std::size_t depth) const {
    Nest nest;
    std::size_t cur = top;
    for (std::size_t d = 0; d < depth; ++d) {
      nest.cycles.push_back(cycles_[cur]);
      if (d + 1 < depth) cur = next_[cur];
    }
    nest.egg = inside_[cur].find_first();
    return nest;
  }

  std::vector<std::vector<std::size_t>> cycles_;
  std::vector<VertexSet> inside_, region_;
  std::vector<std::size_t> chain_, next_;
  std::size_t n_ = 0;
};

inline NestCensus find_nests(const Embedding& emb, std::size_t p, std::size_t limit = 100000) {
  return NestCensus(emb, enumerate_cycles(emb.graph(), p, limit));
}

/// Near-nests: sets of p-cycles holding a common egg strictly inside,
/// pairwise edge-disjoint and sharing at most one vertex. One deepest
/// near-nest per egg vertex that has any.
struct NearNestCensus {
  std::vector<Nest> by_egg;
  std::size_t depth() const {
    std::size_t d = 0;
    for (const Nest& n : by_egg) d = std::max(d, n.depth());
    return d;
  }
};

inline NearNestCensus find_near_nests(const Embedding& emb, const std::vector<std::vector<std::size_t>>& cycles) {
  const std::size_t n = emb.graph().vertex_count(), c = cycles.size();
  std::vector<VertexSet> inside;
  for (const auto& cyc : cycles) inside.push_back(vertices_inside(emb, cyc));
  std::vector<std::vector<char>> ok(c, std::vector<char>(c, 0));
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = a + 1; b < c; ++b) ok[a][b] = ok[b][a] = !detail::near_nest_conflict(cycles[a], cycles[b]);

  NearNestCensus census;
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<std::size_t> around;
    for (std::size_t i = 0; i < c; ++i)
      if (inside[i].test(e)) around.push_back(i);
    if (around.empty()) continue;
    // maximum clique of compatible cycles
    std::vector<std::size_t> best, cur;
    auto grow = [&](auto&& self, const std::vector<std::size_t>& cand) -> void {
      if (cur.size() + cand.size() <= best.size()) return;
      if (cand.empty()) {
        best = cur;
        return;
      }
      for (std::size_t i = 0; i < cand.size(); ++i) {
        if (cur.size() + cand.size() - i <= best.size()) return;
        std::vector<std::size_t> rest;
        for (std::size_t j = i + 1; j < cand.size(); ++j)
          if (ok[cand[i]][cand[j]]) rest.push_back(cand[j]);
        cur.push_back(cand[i]);
        self(self, rest);
        cur.pop_back();
      }
    };
    grow(grow, around);
    // outermost first: larger inner side first
    std::sort(best.begin(), best.end(), [&](std::size_t a, std::size_t b) { return inside[a].count() > inside[b].count(); });
    Nest nest{e, {}};
    for (std::size_t i : best) nest.cycles.push_back(cycles[i]);
    census.by_egg.push_back(std::move(nest));
  }
  return census;
}

inline NearNestCensus find_near_nests(const Embedding& emb, std::size_t p, std::size_t limit = 100000) {
  return find_near_nests(emb, enumerate_cycles(emb.graph(), p, limit));
}

}  // namespace linecover
