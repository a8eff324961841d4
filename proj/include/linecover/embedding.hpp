#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "linecover/geom.hpp"
#include "linecover/graph.hpp"

namespace linecover {

/// A face as its closed boundary walk: consecutive vertices, with the last
/// joined back to the first. The face lies to the left of every step.
using Face = std::vector<std::size_t>;

/// Rotation-system embedding. rotation[v] lists the neighbours of v in
/// counterclockwise order.
class Embedding {
 public:
  Embedding() : Embedding(Graph(), {}) {}
  Embedding(Graph g, std::vector<std::vector<std::size_t>> rotation, std::optional<std::size_t> outer = std::nullopt)
      : graph_(std::move(g)), rotation_(std::move(rotation)) {
    const std::size_t n = graph_.vertex_count();
    if (rotation_.size() != n) throw std::invalid_argument("rotation system: wrong vertex count");
    pos_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto want = graph_.neighbors(v);
      auto got = rotation_[v];
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      if (want != got) throw std::invalid_argument("rotation system: bad neighbour list at vertex " + std::to_string(v));
      for (std::size_t i = 0; i < rotation_[v].size(); ++i) pos_[v][rotation_[v][i]] = i;
    }
    trace();
    if (outer && *outer >= faces_.size()) throw std::invalid_argument("outer face out of range");
    outer_ = outer;
  }

  const Graph& graph() const { return graph_; }
  const std::vector<std::vector<std::size_t>>& rotation() const { return rotation_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::optional<std::size_t> outer_face() const { return outer_; }

  Embedding with_outer_face(std::size_t f) const {
    Embedding e = *this;
    if (f >= faces_.size()) throw std::invalid_argument("outer face out of range");
    e.outer_ = f;
    return e;
  }

  /// Face to the left of the directed edge u->v.
  std::size_t face_of(std::size_t u, std::size_t v) const {
    return face_id_.at(u)[pos_.at(u).at(v)];
  }

  /// The step taken after u->v when walking the face on its left.
  std::size_t next_around_face(std::size_t u, std::size_t v) const {
    const auto& rot = rotation_[v];
    const std::size_t i = pos_[v].at(u);
    return rot[(i + rot.size() - 1) % rot.size()];
  }

  /// Every component traces as a sphere: n - m + f == 2 per component.
  bool satisfies_euler() const {
    const std::size_t n = graph_.vertex_count();
    std::vector<std::size_t> comp(n, n);
    std::size_t components = 0;
    for (std::size_t s = 0; s < n; ++s) {
      if (comp[s] != n) continue;
      ++components;
      std::vector<std::size_t> stack{s};
      comp[s] = s;
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : graph_.neighbors(v))
          if (comp[w] == n) {
            comp[w] = s;
            stack.push_back(w);
          }
      }
    }
    // an isolated vertex has no face walk of its own
    std::size_t isolated = 0;
    for (std::size_t v = 0; v < n; ++v) isolated += graph_.degree(v) == 0;
    const long lhs = static_cast<long>(n) - static_cast<long>(graph_.edge_count()) +
                     static_cast<long>(faces_.size() + isolated);
    return lhs == static_cast<long>(2 * components);
  }

 private:
  void trace() {
    const std::size_t n = graph_.vertex_count();
    face_id_.assign(n, {});
    const std::size_t unset = static_cast<std::size_t>(-1);
    for (std::size_t v = 0; v < n; ++v) face_id_[v].assign(rotation_[v].size(), unset);
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t i = 0; i < rotation_[u].size(); ++i) {
        if (face_id_[u][i] != unset) continue;
        const std::size_t id = faces_.size();
        Face walk;
        std::size_t a = u, b = rotation_[u][i];
        while (face_id_[a][pos_[a][b]] == unset) {
          face_id_[a][pos_[a][b]] = id;
          walk.push_back(a);
          const std::size_t c = next_around_face(a, b);
          a = b;
          b = c;
        }
        if (a != u || b != rotation_[u][i]) throw std::logic_error("face walk did not close");
        faces_.push_back(std::move(walk));
      }
    }
  }

  Graph graph_;
  std::vector<std::vector<std::size_t>> rotation_;
  std::vector<std::map<std::size_t, std::size_t>> pos_;
  std::vector<std::vector<std::size_t>> face_id_;
  std::vector<Face> faces_;
  std::optional<std::size_t> outer_;
};

/// Vertex positions for a straight-line drawing.
struct Drawing {
  std::vector<Point> position;
};

inline Rational face_signed_area2(const Face& f, const Drawing& d) {
  Rational a = 0;
  for (std::size_t i = 0; i < f.size(); ++i) a += cross(d.position[f[i]], d.position[f[(i + 1) % f.size()]]);
  return a;
}

/// Rotation read off a drawing by sorting neighbours by angle; the outer face
/// is the face of least signed area.
inline Embedding embedding_from_drawing(const Graph& g, const Drawing& d) {
  if (d.position.size() != g.vertex_count()) throw std::invalid_argument("drawing: wrong vertex count");
  std::vector<std::vector<std::size_t>> rot(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    rot[v] = g.neighbors(v);
    const Point& o = d.position[v];
    auto half = [&](std::size_t w) {
      const Point q = d.position[w] - o;
      return q.y > 0 || (q.y == 0 && q.x > 0) ? 0 : 1;
    };
    std::sort(rot[v].begin(), rot[v].end(), [&](std::size_t a, std::size_t b) {
      const int ha = half(a), hb = half(b);
      if (ha != hb) return ha < hb;
      return cross(d.position[a] - o, d.position[b] - o) > 0;
    });
  }
  Embedding e(g, std::move(rot));
  if (e.faces().empty()) return e;
  std::size_t outer = 0;
  Rational best = face_signed_area2(e.faces()[0], d);
  for (std::size_t f = 1; f < e.faces().size(); ++f) {
    Rational a = face_signed_area2(e.faces()[f], d);
    if (a < best) {
      best = a;
      outer = f;
    }
  }
  return e.with_outer_face(outer);
}

struct FaceSides {
  std::vector<std::size_t> inside;
  std::vector<std::size_t> outside;
};

/// Splits the faces by a simple cycle: faces reachable from the outer face in
/// the dual without crossing a cycle edge are outside.
inline FaceSides face_inside_relation(const Embedding& emb, const std::vector<std::size_t>& cycle) {
  if (!emb.outer_face()) throw std::invalid_argument("face_inside_relation: no outer face designated");
  const Graph& g = emb.graph();
  if (cycle.size() < 3) throw std::invalid_argument("face_inside_relation: cycle too short");
  std::vector<std::size_t> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("face_inside_relation: cycle repeats a vertex");
  std::set<Edge> cut;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::size_t u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    if (u >= g.vertex_count() || v >= g.vertex_count() || !g.has_edge(u, v))
      throw std::invalid_argument("face_inside_relation: cycle edge not in graph");
    cut.emplace(std::min(u, v), std::max(u, v));
  }
  const std::size_t f = emb.faces().size();
  std::vector<std::vector<std::size_t>> dual(f);
  for (const auto& [u, v] : g.edges()) {
    if (cut.contains({u, v})) continue;
    const std::size_t a = emb.face_of(u, v), b = emb.face_of(v, u);
    dual[a].push_back(b);
    dual[b].push_back(a);
  }
  std::vector<char> out(f, 0);
  std::vector<std::size_t> stack{*emb.outer_face()};
  out[*emb.outer_face()] = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y : dual[x])
      if (!out[y]) {
        out[y] = 1;
        stack.push_back(y);
      }
  }
  FaceSides sides;
  for (std::size_t i = 0; i < f; ++i) (out[i] ? sides.outside : sides.inside).push_back(i);
  return sides;
}

}  // namespace linecover
