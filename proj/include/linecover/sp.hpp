#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linecover/embedding.hpp"
#include "linecover/geom.hpp"
#include "linecover/graph.hpp"

namespace linecover {

/// Series-parallel composition tree. Nested compositions of the same kind
/// are flattened on construction.
class SPExpression {
 public:
  enum class Kind { edge, series, parallel };

  static SPExpression edge() { return SPExpression(Kind::edge, {}); }
  static SPExpression series(std::vector<SPExpression> parts) { return compose(Kind::series, std::move(parts)); }
  static SPExpression parallel(std::vector<SPExpression> parts) { return compose(Kind::parallel, std::move(parts)); }

  Kind kind() const { return kind_; }
  const std::vector<SPExpression>& children() const { return children_; }

  std::size_t edge_count() const {
    if (kind_ == Kind::edge) return 1;
    std::size_t m = 0;
    for (const auto& c : children_) m += c.edge_count();
    return m;
  }

  std::size_t vertex_count() const {
    if (kind_ == Kind::edge) return 2;
    std::size_t inner = 0;
    for (const auto& c : children_) inner += c.vertex_count() - 2;
    return inner + 2 + (kind_ == Kind::series ? children_.size() - 1 : 0);
  }

  std::size_t parallel_count() const {
    std::size_t k = kind_ == Kind::parallel ? 1 : 0;
    for (const auto& c : children_) k += c.parallel_count();
    return k;
  }

  bool operator==(const SPExpression&) const = default;

 private:
  SPExpression(Kind k, std::vector<SPExpression> ch) : kind_(k), children_(std::move(ch)) {}

  static SPExpression compose(Kind k, std::vector<SPExpression> parts) {
    std::vector<SPExpression> flat;
    for (auto& p : parts) {
      if (p.kind_ == k) {
        for (auto& c : p.children_) flat.push_back(std::move(c));
      } else {
        flat.push_back(std::move(p));
      }
    }
    if (flat.size() < 2) throw std::invalid_argument("composition needs at least two parts");
    return SPExpression(k, std::move(flat));
  }

  Kind kind_;
  std::vector<SPExpression> children_;
};

inline std::string to_string(const SPExpression& e) {
  if (e.kind() == SPExpression::Kind::edge) return "E";
  std::string s = e.kind() == SPExpression::Kind::series ? "S(" : "P(";
  for (std::size_t i = 0; i < e.children().size(); ++i) s += (i ? "," : "") + to_string(e.children()[i]);
  return s + ")";
}

/// The graph of an expression. Node i is the i-th expression node in
/// preorder; the whole graph has terminals 0 and 1.
struct SPRealization {
  struct Node {
    SPExpression::Kind kind;
    std::size_t s, t;
    std::vector<std::size_t> junctions;  // series only, in order from s to t
    std::vector<std::size_t> children;
  };
  Graph graph;
  std::size_t s = 0, t = 1;
  std::vector<Node> nodes;
  std::vector<std::size_t> parallel_nodes;
};

namespace detail {

inline std::size_t realize_node(const SPExpression& e, std::size_t s, std::size_t t, SPRealization& r) {
  const std::size_t id = r.nodes.size();
  r.nodes.push_back({e.kind(), s, t, {}, {}});
  switch (e.kind()) {
    case SPExpression::Kind::edge:
      r.graph.add_edge(s, t);
      break;
    case SPExpression::Kind::series: {
      const std::size_t k = e.children().size();
      std::vector<std::size_t> junctions;
      for (std::size_t i = 0; i + 1 < k; ++i) junctions.push_back(r.graph.add_vertex());
      r.nodes[id].junctions = junctions;
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t a = i == 0 ? s : junctions[i - 1];
        const std::size_t b = i + 1 == k ? t : junctions[i];
        const std::size_t c = realize_node(e.children()[i], a, b, r);
        r.nodes[id].children.push_back(c);
      }
      break;
    }
    case SPExpression::Kind::parallel:
      r.parallel_nodes.push_back(id);
      for (const auto& c : e.children()) {
        const std::size_t cid = realize_node(c, s, t, r);
        r.nodes[id].children.push_back(cid);
      }
      break;
  }
  return id;
}

}  // namespace detail

inline SPRealization realize(const SPExpression& e) {
  SPRealization r;
  r.graph = Graph(2);
  detail::realize_node(e, 0, 1, r);
  return r;
}

/// Child order for each parallel node, indexed like parallel_nodes.
using ParallelOrders = std::vector<std::vector<std::size_t>>;

namespace detail {

struct TerminalLists {
  std::vector<std::size_t> at_s, at_t;  // left to right with s below and t above
};

inline TerminalLists embed_node(const SPRealization& r, std::size_t id, const std::vector<const std::vector<std::size_t>*>& order,
                                std::vector<std::vector<std::size_t>>& rot) {
  const auto& node = r.nodes[id];
  switch (node.kind) {
    case SPExpression::Kind::edge:
      return {{node.t}, {node.s}};
    case SPExpression::Kind::series: {
      std::vector<TerminalLists> parts;
      for (std::size_t c : node.children) parts.push_back(embed_node(r, c, order, rot));
      for (std::size_t i = 0; i < node.junctions.size(); ++i) {
        auto& around = rot[node.junctions[i]];
        around.assign(parts[i + 1].at_s.rbegin(), parts[i + 1].at_s.rend());
        around.insert(around.end(), parts[i].at_t.begin(), parts[i].at_t.end());
      }
      return {parts.front().at_s, parts.back().at_t};
    }
    case SPExpression::Kind::parallel: {
      TerminalLists out;
      for (std::size_t k : *order[id]) {
        TerminalLists part = embed_node(r, node.children[k], order, rot);
        out.at_s.insert(out.at_s.end(), part.at_s.begin(), part.at_s.end());
        out.at_t.insert(out.at_t.end(), part.at_t.begin(), part.at_t.end());
      }
      return out;
    }
  }
  return {};
}

}  // namespace detail

/// Rotation system obtained by placing the children of every parallel node
/// left to right in the given order.
inline std::vector<std::vector<std::size_t>> rotation_system(const SPRealization& r, const ParallelOrders& orders) {
  if (orders.size() != r.parallel_nodes.size()) throw std::invalid_argument("rotation_system: wrong number of orders");
  std::vector<const std::vector<std::size_t>*> by_node(r.nodes.size(), nullptr);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<std::size_t> check = orders[i];
    std::sort(check.begin(), check.end());
    std::vector<std::size_t> want(r.nodes[r.parallel_nodes[i]].children.size());
    std::iota(want.begin(), want.end(), 0);
    if (check != want) throw std::invalid_argument("rotation_system: order is not a permutation");
    by_node[r.parallel_nodes[i]] = &orders[i];
  }
  std::vector<std::vector<std::size_t>> rot(r.graph.vertex_count());
  auto top = detail::embed_node(r, 0, by_node, rot);
  rot[r.s].assign(top.at_s.rbegin(), top.at_s.rend());
  rot[r.t] = top.at_t;
  return rot;
}

inline ParallelOrders identity_orders(const SPRealization& r) {
  ParallelOrders o;
  for (std::size_t id : r.parallel_nodes) {
    o.emplace_back(r.nodes[id].children.size());
    std::iota(o.back().begin(), o.back().end(), 0);
  }
  return o;
}

struct EnumerationLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every child order at every parallel node, crossed with every outer face.
/// A parallel node with two children contributes one flip bit.
class EmbeddingEnumerator {
 public:
  EmbeddingEnumerator(const SPExpression& e, std::size_t max_count) : real_(realize(e)), orders_(identity_orders(real_)) {
    const Graph& g = real_.graph;
    faces_ = g.edge_count() + 2 - g.vertex_count();
    rotations_ = 1;
    for (const auto& o : orders_) {
      std::size_t f = 1;
      for (std::size_t k = 2; k <= o.size(); ++k) f *= k;
      if (rotations_ > max_count / f) throw EnumerationLimitError("embedding count exceeds limit");
      rotations_ *= f;
    }
    if (faces_ == 0 || rotations_ > max_count / faces_) throw EnumerationLimitError("embedding count exceeds limit");
  }

  const SPRealization& realization() const { return real_; }
  std::size_t rotation_count() const { return rotations_; }
  std::size_t face_count() const { return faces_; }
  std::size_t total() const { return rotations_ * faces_; }

  /// Next rotation system, with no outer face chosen.
  std::optional<Embedding> next_rotation() {
    if (done_) return std::nullopt;
    Embedding e(real_.graph, rotation_system(real_, orders_));
    advance();
    return e;
  }

  /// Next (rotation system, outer face) pair.
  std::optional<Embedding> next() {
    if (!current_ || face_ == current_->faces().size()) {
      current_ = next_rotation();
      face_ = 0;
      if (!current_) return std::nullopt;
    }
    return current_->with_outer_face(face_++);
  }

 private:
  void advance() {
    for (auto& o : orders_)
      if (std::next_permutation(o.begin(), o.end())) return;  // wrapped orders are back to identity
    done_ = true;
  }

  SPRealization real_;
  ParallelOrders orders_;
  std::size_t rotations_ = 1, faces_ = 0;
  bool done_ = false;
  std::optional<Embedding> current_;
  std::size_t face_ = 0;
};

/// Straight-line drawing with s at (0,0) and t at (1,0). Every node lies in
/// the diamond |y| <= min(x, 1-x) of its own frame; non-edge children of a
/// parallel node run in lanes at y = +1/4 and y = -1/4. Supported when each
/// parallel node has at most one edge child and two other children, and each
/// lane begins and ends with an edge.
inline Drawing sp_reference_drawing(const SPRealization& r) {
  Drawing d;
  d.position.assign(r.graph.vertex_count(), Point());
  d.position[r.s] = Point(0, 0);
  d.position[r.t] = Point(1, 0);
  const Rational quarter(1, 4), third(1, 3);

  // frame maps (x, y) to s + x*w + y*perp(w)
  auto place = [&](std::size_t s, std::size_t t, const Rational& x, const Rational& y) {
    const Point& p = d.position[s];
    const Point w = d.position[t] - p;
    return Point(p.x + x * w.x - y * w.y, p.y + x * w.y + y * w.x);
  };

  auto draw = [&](auto&& self, std::size_t id, const Rational& lane) -> void {
    const auto& node = r.nodes[id];
    if (node.kind == SPExpression::Kind::edge) return;
    if (node.kind == SPExpression::Kind::parallel) {
      int edges = 0, lanes = 0;
      for (std::size_t c : node.children) {
        if (r.nodes[c].kind == SPExpression::Kind::edge) {
          if (++edges > 1) throw std::invalid_argument("sp drawing: parallel edges");
          continue;
        }
        if (lanes == 2) throw std::invalid_argument("sp drawing: more than two lanes");
        self(self, c, lanes++ == 0 ? quarter : -quarter);
      }
      return;
    }
    const std::size_t k = node.children.size();
    if (lane != 0 && (r.nodes[node.children.front()].kind != SPExpression::Kind::edge ||
                      r.nodes[node.children.back()].kind != SPExpression::Kind::edge))
      throw std::invalid_argument("sp drawing: lane must start and end with an edge");
    const std::size_t j = node.junctions.size();
    for (std::size_t i = 0; i < j; ++i) {
      const Rational x = j == 1 ? Rational(1, 2) : third + third * Rational(static_cast<long>(i), static_cast<long>(j - 1));
      d.position[node.junctions[i]] = place(node.s, node.t, x, lane);
    }
    for (std::size_t i = 0; i < k; ++i) self(self, node.children[i], Rational(0));
  };
  draw(draw, 0, Rational(0));
  return d;
}

}  // namespace linecover
