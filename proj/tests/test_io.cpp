#include <gtest/gtest.h>

#include "linecover/io.hpp"

using namespace linecover;
namespace io = linecover::io;

namespace {

// Serialize, reparse from text, and serialize again.
io::json reparse(const io::json& j) { return io::json::parse(j.dump(2)); }

}  // namespace

TEST(Io, GraphRoundTrip) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  const io::json j = io::to_json(g);
  const Graph h = io::graph_from_json(reparse(j));
  EXPECT_EQ(h.edges(), g.edges());
  EXPECT_EQ(io::to_json(h).dump(), j.dump());
}

TEST(Io, PositionsAreExactStrings) {
  Drawing d;
  d.position = {Point(Rational(1, 3), Rational(-7, 2)), Point(5, 0)};
  const io::json j = io::positions_to_json(d);
  EXPECT_EQ(j[0][0], "1/3");
  EXPECT_EQ(j[0][1], "-7/2");
  EXPECT_EQ(j[1][0], "5/1");
  const Drawing e = io::drawing_from_json(reparse(j));
  EXPECT_EQ(e.position, d.position);
}

TEST(Io, ExpressionRoundTrip) {
  const SPExpression b = b_expression(3);
  const io::json j = io::to_json(b);
  const SPExpression c = io::expression_from_json(reparse(j));
  EXPECT_EQ(to_string(c), to_string(b));
  EXPECT_THROW(io::expression_from_json(io::json{{"type", "Q"}}), io::FormatError);
}

TEST(Io, ConstructedGraphRoundTrip) {
  for (const auto& c : {build_counterexample(2, Variant::hexgrid), build_series_parallel(3, SPKind::B), build_apex_tree(3)}) {
    const io::json j = io::to_json(c);
    EXPECT_EQ(reparse(j).dump(2), j.dump(2));
    const Embedding e = io::embedding_from_json(reparse(j)["graph"]);
    EXPECT_EQ(e.rotation(), c.embedding.rotation());
    EXPECT_EQ(e.outer_face(), c.embedding.outer_face());
    const Drawing d = io::drawing_from_json(j["positions"]);
    EXPECT_EQ(d.position, c.drawing.position);
    EXPECT_TRUE(verify_drawing(e.graph(), d).planar);
  }
}

TEST(Io, MalformedInputThrows) {
  EXPECT_THROW(io::graph_from_json(io::json{{"edges", io::json::array()}}), io::FormatError);
  EXPECT_THROW(io::graph_from_json(io::json::parse(R"({"n":2,"edges":[[0,5]]})")), io::FormatError);
  EXPECT_THROW(io::point_from_json(io::json::parse(R"(["1/0","2"])")), io::FormatError);
  EXPECT_THROW(io::embedding_from_json(io::json::parse(R"({"n":2,"edges":[[0,1]],"rotation":[[1]]})")), io::FormatError);
}

TEST(Io, LeveledDrawingRoundTrip) {
  const io::json in = io::json::parse(R"({"n":3,"edges":[[0,1],[1,2]],"levels":[0,0,1],"order":[[0,1],[2]]})");
  const LeveledDrawing ld = io::leveled_from_json(in);
  EXPECT_EQ(io::to_json(ld).dump(), in.dump());
}

TEST(Io, DotAndSvg) {
  const auto c = build_apex_tree(2);
  const std::string dot = io::to_dot(c.graph, c.roles);
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
  EXPECT_NE(dot.find("role=\"apex\""), std::string::npos);
  const std::string svg = io::to_svg(c.graph, c.drawing, {Line::horizontal(0)});
  EXPECT_NE(svg.find("viewBox=\"0 0 1000 1000\""), std::string::npos);
  EXPECT_NE(svg.find("stroke=\"#ccc\""), std::string::npos);
  std::size_t circles = 0;
  for (std::size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++circles;
  EXPECT_EQ(circles, c.graph.vertex_count());
}
