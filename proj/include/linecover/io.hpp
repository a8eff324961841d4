#pragma once

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "linecover/constructions.hpp"
#include "linecover/drawing.hpp"
#include "linecover/layout.hpp"
#include "linecover/nests.hpp"
#include "linecover/sp.hpp"

// File formats. Coordinates are written as "num/den" strings so that files
// round-trip exactly.

namespace linecover::io {

using json = nlohmann::ordered_json;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const json& j) {
  try {
    Graph g(j.at("n").get<std::size_t>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
    return g;
  } catch (const json::exception& e) {
    throw FormatError(std::string("graph: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("graph: ") + e.what());
  }
}

/// Graph plus rotation system and outer face.
inline json to_json(const Embedding& emb) {
  json j = to_json(emb.graph());
  j["rotation"] = emb.rotation();
  if (emb.outer_face()) j["outer_face"] = *emb.outer_face();
  return j;
}

inline Embedding embedding_from_json(const json& j) {
  Graph g = graph_from_json(j);
  try {
    auto rot = j.at("rotation").get<std::vector<std::vector<std::size_t>>>();
    std::optional<std::size_t> outer;
    if (j.contains("outer_face")) outer = j["outer_face"].get<std::size_t>();
    return Embedding(std::move(g), std::move(rot), outer);
  } catch (const json::exception& e) {
    throw FormatError(std::string("embedding: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("embedding: ") + e.what());
  }
}

inline json to_json(const Point& p) { return json::array({to_string(p.x), to_string(p.y)}); }

inline Point point_from_json(const json& j) {
  try {
    return Point(parse_rational(j.at(0).get<std::string>()), parse_rational(j.at(1).get<std::string>()));
  } catch (const json::exception& e) {
    throw FormatError(std::string("point: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("point: ") + e.what());
  }
}

inline json positions_to_json(const Drawing& d) {
  json out = json::array();
  for (const Point& p : d.position) out.push_back(to_json(p));
  return out;
}

inline Drawing drawing_from_json(const json& positions) {
  if (!positions.is_array()) throw FormatError("positions: expected an array");
  Drawing d;
  for (const auto& p : positions) d.position.push_back(point_from_json(p));
  return d;
}

inline json to_json(const Line& l) { return {{"a", to_string(l.a())}, {"b", to_string(l.b())}, {"c", to_string(l.c())}}; }

inline Line line_from_json(const json& j) {
  try {
    return Line(parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()),
                parse_rational(j.at("c").get<std::string>()));
  } catch (const std::exception& e) {
    throw FormatError(std::string("line: ") + e.what());
  }
}

inline json to_json(const SPExpression& e) {
  switch (e.kind()) {
    case SPExpression::Kind::edge:
      return {{"type", "E"}};
    case SPExpression::Kind::series:
    case SPExpression::Kind::parallel: {
      json children = json::array();
      for (const auto& c : e.children()) children.push_back(to_json(c));
      return {{"type", e.kind() == SPExpression::Kind::series ? "S" : "P"}, {"children", std::move(children)}};
    }
  }
  return {};
}

inline SPExpression expression_from_json(const json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "E") return SPExpression::edge();
    std::vector<SPExpression> parts;
    for (const auto& c : j.at("children")) parts.push_back(expression_from_json(c));
    if (type == "S") return SPExpression::series(std::move(parts));
    if (type == "P") return SPExpression::parallel(std::move(parts));
    throw FormatError("expression: unknown node type " + type);
  } catch (const json::exception& e) {
    throw FormatError(std::string("expression: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("expression: ") + e.what());
  }
}

inline json to_json(const ConstructedGraph& c) {
  json j;
  j["family"] = c.family;
  const auto& p = c.parameters;
  json params;
  if (p.ell) params["lines"] = p.ell;
  if (p.subunits) params["subunits"] = p.subunits;
  if (p.depth) params["depth"] = p.depth;
  if (p.i) params["i"] = p.i;
  if (p.j) params["j"] = p.j;
  j["parameters"] = params.is_null() ? json::object() : params;
  j["graph"] = to_json(c.embedding);
  j["positions"] = positions_to_json(c.drawing);
  json roles = json::array();
  for (const auto& r : c.roles) {
    json x{{"role", to_string(r.role)}};
    if (r.subunit >= 0) x["subunit"] = r.subunit;
    if (r.level >= 0) x["level"] = r.level;
    if (r.index >= 0) x["index"] = r.index;
    roles.push_back(std::move(x));
  }
  j["roles"] = std::move(roles);
  if (!c.subunits.empty()) {
    json units = json::array();
    for (const auto& u : c.subunits) units.push_back({{"hexagons", u.hexagons}, {"egg", u.egg}});
    j["subunits"] = std::move(units);
    j["frame_vertices"] = c.frame_vertices;
  }
  if (c.expression) j["expression"] = to_json(*c.expression);
  return j;
}

inline json to_json(const VerificationReport& r) {
  auto edge = [](const Edge& e) { return json::array({e.first, e.second}); };
  json j;
  j["planar"] = r.planar;
  j["distinct_positions"] = r.distinct_positions;
  j["violation_count"] = r.violation_count;
  json coincident = json::array(), on_edge = json::array(), crossings = json::array();
  for (const auto& [a, b] : r.coincident_vertices) coincident.push_back({a, b});
  for (const auto& [v, e] : r.vertex_on_edge) on_edge.push_back({{"vertex", v}, {"edge", edge(e)}});
  for (const auto& [e, f] : r.crossings) crossings.push_back({edge(e), edge(f)});
  j["coincident_vertices"] = std::move(coincident);
  j["vertex_on_edge"] = std::move(on_edge);
  j["crossings"] = std::move(crossings);
  if (r.line_cover_size) {
    j["line_cover_size"] = *r.line_cover_size;
    json lines = json::array();
    for (const Line& l : r.cover) lines.push_back(to_json(l));
    j["cover"] = std::move(lines);
  }
  if (r.cover_over_budget) j["cover_over_budget"] = true;
  if (r.cover_skipped) j["cover_skipped"] = true;
  return j;
}

inline json to_json(const Polygon& poly) {
  json j = json::array();
  for (const Point& p : poly.vertices()) j.push_back(to_json(p));
  return j;
}

inline json to_json(const NestSpec& spec) {
  json polys = json::array();
  for (const Polygon& p : spec.polygons) polys.push_back(to_json(p));
  return {{"polygons", std::move(polys)}, {"egg", to_json(spec.egg)}};
}

inline json to_json(const Arrangement& arr) {
  json j = json::array();
  for (const Line& l : arr.lines()) j.push_back(to_json(l));
  return j;
}

inline json to_json(const NestAudit& a) {
  json j{{"on_lines", a.on_lines}};
  if (!a.error.empty()) j["error"] = a.error;
  j["segment_count"] = a.segment_count;
  j["segment_bound"] = a.segment_bound;
  j["consumed"] = a.consumed;
  j["remaining"] = a.remaining;
  json pts = json::array();
  for (const Point& p : a.interior_crossings) pts.push_back(to_json(p));
  j["interior_crossings"] = std::move(pts);
  j["crossings_per_polygon"] = a.crossings_per_polygon;
  j["feasible"] = a.feasible;
  return j;
}

inline json to_json(const Nest& n) { return {{"egg", n.egg}, {"depth", n.depth()}, {"cycles", n.cycles}}; }

inline LeveledDrawing leveled_from_json(const json& j) {
  LeveledDrawing ld;
  ld.graph = graph_from_json(j);
  try {
    ld.level = j.at("levels").get<std::vector<int>>();
    ld.order = j.at("order").get<std::vector<std::vector<std::size_t>>>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("leveled drawing: ") + e.what());
  }
  return ld;
}

inline json to_json(const LeveledDrawing& ld) {
  json j = to_json(ld.graph);
  j["levels"] = ld.level;
  j["order"] = ld.order;
  return j;
}

inline std::string to_dot(const Graph& g, const std::vector<VertexRole>& roles = {}) {
  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (v < roles.size()) os << " [role=\"" << to_string(roles[v].role) << "\"]";
    os << ";\n";
  }
  for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

/// Lines are light strokes across the bounding box, drawn first; edges are
/// solid; vertices are filled circles.
inline std::string to_svg(const Graph& g, const Drawing& d, const std::vector<Line>& lines = {}) {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!d.position.empty()) {
    x0 = x1 = d.position[0].x.get_d();
    y0 = y1 = d.position[0].y.get_d();
  }
  for (const Point& p : d.position) {
    x0 = std::min(x0, p.x.get_d());
    x1 = std::max(x1, p.x.get_d());
    y0 = std::min(y0, p.y.get_d());
    y1 = std::max(y1, p.y.get_d());
  }
  const double span = std::max({x1 - x0, y1 - y0, 1e-12}), pad = 0.05 * span;
  x0 -= pad, y0 -= pad, x1 += pad, y1 += pad;
  const double scale = 1000 / (span + 2 * pad);
  auto sx = [&](double x) { return (x - x0) * scale; };
  auto sy = [&](double y) { return (y1 - y) * scale; };
  char buf[160];
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
  for (const Line& l : lines) {
    const double a = l.a().get_d(), b = l.b().get_d(), c = l.c().get_d();
    double ax, ay, bx, by;
    if (std::abs(b) > std::abs(a)) {
      ax = x0, bx = x1, ay = (c - a * x0) / b, by = (c - a * x1) / b;
    } else {
      ay = y0, by = y1, ax = (c - b * y0) / a, bx = (c - b * y1) / a;
    }
    std::snprintf(buf, sizeof buf, "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"#ccc\"/>\n", sx(ax), sy(ay),
                  sx(bx), sy(by));
    os << buf;
  }
  for (const auto& [u, v] : g.edges()) {
    const Point &p = d.position[u], &q = d.position[v];
    std::snprintf(buf, sizeof buf, "<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" stroke=\"black\"/>\n",
                  sx(p.x.get_d()), sy(p.y.get_d()), sx(q.x.get_d()), sy(q.y.get_d()));
    os << buf;
  }
  for (const Point& p : d.position) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.3f\" cy=\"%.3f\" r=\"3\"/>\n", sx(p.x.get_d()), sy(p.y.get_d()));
    os << buf;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace linecover::io
