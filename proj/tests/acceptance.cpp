// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "linecover/io.hpp"
#include "linecover/line_cover.hpp"
#include "linecover/suites.hpp"

using namespace linecover;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void check(bool ok, const std::string& what) {
    if (!ok && pass) detail = "first failure: " + what;
    pass = pass && ok;
  }
};

std::string summarize(const suites::SuiteReport& r) {
  std::string s = std::to_string(r.cases.size()) + " cases, " + std::to_string(r.failures()) + " failures";
  for (const auto& c : r.cases)
    if (!c.pass) return s + "; first: " + c.detail;
  return s;
}

Outcome suite_outcome(const suites::SuiteReport& r, std::size_t want_cases) {
  Outcome o;
  o.check(r.cases.size() >= want_cases, "only " + std::to_string(r.cases.size()) + " cases");
  o.check(r.passed(), "suite reported failures");
  o.detail = summarize(r) + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome c1() {
  suites::SuiteOptions opt;
  opt.seed = 1;
  opt.cases = 10000;
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = suites::lemma1(opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o = suite_outcome(rep, 10000);
  o.check(secs < 30, "took " + std::to_string(secs) + " s");
  char buf[32];
  std::snprintf(buf, sizeof buf, ", %.1f s", secs);
  o.detail += buf;
  return o;
}

Outcome c2() {
  suites::SuiteOptions opt;
  opt.cases = 500;
  return suite_outcome(suites::lemma3(opt), 500);
}

Outcome c3() {
  suites::SuiteOptions opt;
  opt.cases = 200;
  return suite_outcome(suites::lemma4(opt), 200);
}

Outcome c4() {
  Outcome o;
  o.check(infeasibility_threshold(6, 4, NestKind::nest) == 8, "(6,4,nest)");
  o.check(infeasibility_threshold(6, 3, NestKind::nest) == 6, "(6,3,nest)");
  o.check(infeasibility_threshold(4, 3, NestKind::near_nest) == 8, "(4,3,near)");
  // smallest r with 2(r-1) > ell*floor(p/2), resp. r-1 > ell*floor(p/2), by search
  for (int p = 3; p <= 12; ++p)
    for (int ell = 1; ell <= 100; ++ell) {
      const int s = ell * (p / 2);
      int nest = 1, near = 1;
      while (!(2 * (nest - 1) > s)) ++nest;
      while (!(near - 1 > s)) ++near;
      o.check(infeasibility_threshold(p, ell, NestKind::nest) == nest,
              "nest p=" + std::to_string(p) + " ell=" + std::to_string(ell));
      o.check(infeasibility_threshold(p, ell, NestKind::near_nest) == near,
              "near p=" + std::to_string(p) + " ell=" + std::to_string(ell));
    }
  const auto rep = suites::lemma8({});
  o.check(rep.passed(), "near-nest suite: " + summarize(rep));
  if (o.pass) o.detail = "exact values and 2000 closed-form checks";
  return o;
}

Outcome c5() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (int ell = 1; ell <= 3; ++ell)
    for (Variant var : {Variant::hexgrid, Variant::zigzag}) {
      const std::string tag = std::string(var == Variant::hexgrid ? "hexgrid" : "zigzag") + " ell=" + std::to_string(ell);
      const ConstructedGraph c = build_counterexample(ell, var);
      const Graph& g = c.graph;
      const PropertyReport props = check_properties(g);
      o.check(props.cubic && props.bipartite, tag + " cubic/bipartite");
      o.check(is_k_connected(g, 3), tag + " 3-connected");
      const auto& faces = c.embedding.faces();
      for (std::size_t f = 0; f < faces.size(); ++f)
        if (f != *c.embedding.outer_face()) o.check(faces[f].size() % 2 == 0, tag + " odd bounded face");
      const std::size_t units = static_cast<std::size_t>(ell) * (ell - 1) / 2 + 2;
      const std::size_t depth = static_cast<std::size_t>((3 * ell + 1) / 2 + 2);
      o.check(c.subunits.size() == units, tag + " subunit count");
      for (const Subunit& u : c.subunits) {
        o.check(u.hexagons.size() == depth, tag + " hexagons per subunit");
        for (std::size_t h = 0; h < u.hexagons.size(); ++h) {
          const auto& hex = u.hexagons[h];
          for (std::size_t i = 0; i < 6; ++i) o.check(g.has_edge(hex[i], hex[(i + 1) % 6]), tag + " hexagon is not a cycle");
          const std::vector<std::size_t> cyc(hex.begin(), hex.end());
          const VertexSet inside = vertices_inside(c.embedding, cyc);
          o.check(inside.test(u.egg), tag + " egg outside a hexagon");
          if (h + 1 < u.hexagons.size())
            for (std::size_t v : u.hexagons[h + 1]) o.check(inside.test(v), tag + " hexagons not nested");
        }
      }
      o.check(g.vertex_count() <= cubic_vertex_constant * static_cast<std::size_t>(ell * ell * ell), tag + " size bound");
      o.check(verify_drawing(g, c.drawing).planar, tag + " drawing");
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(secs < 120, "took " + std::to_string(secs) + " s");
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "6 graphs, n <= %zu*ell^3, %.1f s", cubic_vertex_constant, secs);
    o.detail = buf;
  }
  return o;
}

Outcome c6() {
  Outcome o;
  // |V(A_1)| = 2, |V(B_i)| = 2 + 2|V(A_i)|, |V(A_i)| = |V(B_{i-1})| + 2
  std::size_t a = 2;
  for (int i = 1; i <= 8; ++i) {
    if (i > 1) a = (2 + 2 * a) + 2;
    const std::size_t b = 2 + 2 * a;
    const ConstructedGraph c = build_series_parallel(i, SPKind::B);
    const Graph& g = c.graph;
    o.check(g.vertex_count() == b, "B_" + std::to_string(i) + " has " + std::to_string(g.vertex_count()));
    const PropertyReport props = check_properties(g);
    o.check(props.subcubic && props.bipartite, "B_" + std::to_string(i) + " subcubic/bipartite");
    std::size_t terminals = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (c.roles[v].role == Role::terminal) {
        ++terminals;
        o.check(g.degree(v) == 2, "terminal degree");
      }
    o.check(terminals == 2, "terminal count");
  }
  o.check(build_series_parallel(1, SPKind::B).graph.vertex_count() == 6, "b1");
  o.check(build_series_parallel(4, SPKind::B).graph.vertex_count() == 90, "b4");
  if (o.pass) o.detail = "i = 1..8, b1 = 6, b4 = 90";
  return o;
}

Outcome c7() {
  const auto t0 = std::chrono::steady_clock::now();
  suites::SuiteOptions opt;
  opt.index = 3;
  const auto a = suites::lemma6(opt);
  const auto b = suites::lemma7(opt);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Outcome o;
  o.check(a.passed(), "A_3: " + summarize(a));
  o.check(b.passed(), "B_3: " + summarize(b));
  // 64 rotation systems of A_3 times 7 faces; B_3 sweeps 8192 x 14
  EmbeddingEnumerator ea(a_expression(3), opt.max_embeddings);
  o.check(ea.rotation_count() == 64 && ea.total() == 64 * 7, "A_3 enumeration size");
  o.check(b.cases.size() == 8192 * 14, "B_3 enumeration size");
  o.check(secs < 300, "took " + std::to_string(secs) + " s");
  if (o.pass) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "A_3: %zu qualifying embeddings; B_3: %zu embeddings; %.1f s", a.cases.size(),
                  b.cases.size(), secs);
    o.detail = buf;
  }
  return o;
}

Outcome c8() {
  suites::SuiteOptions opt;
  opt.index = 3;
  const auto rep = suites::lemma9(opt);
  Outcome o;
  o.check(rep.passed(), summarize(rep));
  const std::vector<Point> pos{Point(0, 0), Point(2, 0), Point(2, 2), Point(0, 2), Point(1, 1),
                               Point(-1, -1), Point(3, -1), Point(3, 3), Point(-1, 3)};
  o.check(!verify_nest(NearNestSpec{{{0, 1, 2, 3}, {0, 1, 7, 8}}, 4, pos}).valid, "shared edge accepted");
  o.check(!verify_nest(NearNestSpec{{{0, 1, 2, 3}, {0, 6, 2, 8}}, 4, pos}).valid, "two shared vertices accepted");
  o.check(verify_nest(NearNestSpec{{{5, 6, 7, 8}, {0, 1, 2, 3}}, 4, pos}).valid, "valid near-nest rejected");
  if (o.pass) o.detail = std::to_string(rep.cases.size()) + " embeddings, all with depth >= 2; both violations rejected";
  return o;
}

Graph random_tree(random::Rng& rng, std::size_t n) {
  std::vector<std::size_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  Graph t(n);
  for (std::size_t v = 1; v < n; ++v)
    t.add_edge(label[v], label[static_cast<std::size_t>(random::uniform_int(rng, 0, static_cast<long>(v) - 1))]);
  return t;
}

int ceil_log2(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

Outcome c9() {
  Outcome o;
  random::Rng rng(9);
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t largest = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(random::uniform_int(rng, 2, 1000));
    largest = std::max(largest, n);
    const Graph tree = random_tree(rng, n);
    const auto root = static_cast<std::size_t>(random::uniform_int(rng, 0, static_cast<long>(n) - 1));
    std::vector<std::size_t> hooks;
    for (std::size_t v = 0; v < n; ++v)
      if (random::uniform_int(rng, 0, 1)) hooks.push_back(v);
    const ApexTreeDrawing at = draw_apex_tree(tree, root, hooks);
    const std::string tag = "trial " + std::to_string(trial) + " n=" + std::to_string(n);
    o.check(verify_drawing(at.graph, at.drawing).planar, tag + " not planar");
    std::vector<Rational> ys;
    std::vector<long> xs;
    for (std::size_t v = 0; v < n; ++v) {
      ys.push_back(at.drawing.position[v].y);
      const Rational& x = at.drawing.position[v].x;
      o.check(x.get_den() == 1, tag + " fractional x");
      xs.push_back(x.get_num().get_si());
    }
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    o.check(static_cast<int>(ys.size()) <= ceil_log2(n), tag + " uses " + std::to_string(ys.size()) + " levels");
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i < n; ++i) o.check(xs[i] == static_cast<long>(i + 1), tag + " x not a permutation");
    for (const auto& [u, v] : tree.edges()) {
      const Point &p = at.drawing.position[u], &q = at.drawing.position[v];
      const Rational dx = q.x - p.x, dy = q.y - p.y;
      o.check(dx != 0, tag + " vertical tree edge");
      if (dx == 0) continue;
      const Rational slope = dy / dx;
      o.check(slope >= 0 && slope <= 1, tag + " slope outside [0,1]");
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.check(secs < 60, "took " + std::to_string(secs) + " s");
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "200 trees, n up to %zu, %.1f s", largest, secs);
    o.detail = buf;
  }
  return o;
}

LeveledDrawing random_leveled(random::Rng& rng) {
  LeveledDrawing ld;
  const auto levels = static_cast<std::size_t>(random::uniform_int(rng, 1, 9));
  for (std::size_t k = 0; k < levels; ++k) {
    ld.order.emplace_back();
    const auto width = random::uniform_int(rng, 1, 6);
    for (long i = 0; i < width; ++i) {
      ld.order[k].push_back(ld.graph.add_vertex());
      ld.level.push_back(static_cast<int>(k));
    }
  }
  for (std::size_t k = 0; k < levels; ++k) {
    const auto& row = ld.order[k];
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
      if (random::uniform_int(rng, 0, 1)) ld.graph.add_edge(row[i], row[i + 1]);
    if (k + 1 == levels) continue;
    const auto& up = ld.order[k + 1];
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    for (int tries = 0; tries < 8; ++tries) {
      const auto a = static_cast<std::size_t>(random::uniform_int(rng, 0, static_cast<long>(row.size()) - 1));
      const auto b = static_cast<std::size_t>(random::uniform_int(rng, 0, static_cast<long>(up.size()) - 1));
      bool ok = !ld.graph.has_edge(row[a], up[b]);
      for (auto [c, e] : spans) ok = ok && !((a < c && b > e) || (a > c && b < e));
      if (!ok) continue;
      spans.emplace_back(a, b);
      ld.graph.add_edge(row[a], up[b]);
    }
  }
  return ld;
}

Outcome c10() {
  Outcome o;
  LeveledDrawing grid;
  grid.graph = Graph(16);
  grid.order.resize(4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const std::size_t v = 4 * r + c;
      grid.level.push_back(static_cast<int>(r));
      grid.order[r].push_back(v);
      if (c > 0) grid.graph.add_edge(v - 1, v);
      if (r > 0) grid.graph.add_edge(v - 4, v);
    }
  std::vector<LeveledDrawing> inputs{grid};
  random::Rng rng(10);
  for (int i = 0; i < 20; ++i) inputs.push_back(random_leveled(rng));
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const Drawing d = spiral_two_lines(inputs[i]);
    const std::string tag = i == 0 ? "grid" : "random " + std::to_string(i);
    o.check(verify_drawing(inputs[i].graph, d).planar, tag + " not planar");
    for (const Point& p : d.position) o.check(p.x == 0 || p.y == 0, tag + " vertex off the axes");
  }
  if (o.pass) o.detail = "4x4 grid and 20 random leveled graphs on x=0 or y=0";
  return o;
}

Outcome c11() {
  Outcome o;
  std::string targets;
  for (int ell : {3, 5, 7, 9}) {
    const std::string tag = "ell=" + std::to_string(ell);
    auto [spec, arr] = draw_parallel_hexnest(ell);
    o.check(static_cast<int>(spec.polygons.size()) == (ell - 1) / 2, tag + " parallel depth");
    o.check(verify_nest(spec).valid, tag + " parallel nest invalid");
    o.check(crossings(arr).empty(), tag + " parallel lines cross");
    const NestAudit a = audit_nest_against_arrangement(spec, arr);
    o.check(a.on_lines && a.interior_crossings.empty() && a.feasible, tag + " parallel audit");

    const HexnestResult f = draw_fig7_hexnest(ell);
    o.check(f.depth >= (ell - 1) / 2, tag + " below baseline");
    o.check(static_cast<int>(f.arrangement.size()) == ell, tag + " line count");
    o.check(verify_nest(f.nest).valid, tag + " certificate nest invalid");
    const NestAudit fa = audit_nest_against_arrangement(f.nest, f.arrangement);
    o.check(fa.on_lines && fa.interior_crossings.empty() && fa.feasible, tag + " certificate audit");
    targets += " " + tag + ":" + std::to_string(f.depth) + "/" + std::to_string(f.target) + (f.target_met ? " met" : " unmet");
  }
  o.detail = (o.pass ? "baseline ok; target" : o.detail + "; target") + targets;
  return o;
}

// Exhaustive minimum cover over subsets, memoized on the uncovered mask.
int cover_oracle(const std::vector<std::pair<long, long>>& p) {
  const std::size_t n = p.size();
  std::map<unsigned, int> memo;
  auto collinear = [&](std::size_t a, std::size_t b, std::size_t c) {
    return (p[b].first - p[a].first) * (p[c].second - p[a].second) ==
           (p[b].second - p[a].second) * (p[c].first - p[a].first);
  };
  std::function<int(unsigned)> best = [&](unsigned left) -> int {
    if (left == 0) return 0;
    if (auto it = memo.find(left); it != memo.end()) return it->second;
    std::size_t a = 0;
    while (!(left >> a & 1u)) ++a;
    int r = 1 + best(left & ~(1u << a));
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a || p[b] == p[a]) continue;
      unsigned on = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (collinear(a, b, c)) on |= 1u << c;
      r = std::min(r, 1 + best(left & ~on));
    }
    return memo[left] = r;
  };
  unsigned all = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool dup = false;
    for (std::size_t j = 0; j < i; ++j) dup = dup || p[j] == p[i];
    if (!dup) all |= 1u << i;
  }
  return best(all);
}

Outcome c12() {
  Outcome o;
  random::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<std::size_t>(random::uniform_int(rng, 1, 10));
    const long box = random::uniform_int(rng, 2, 6);
    std::vector<std::pair<long, long>> raw;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
      raw.emplace_back(random::uniform_int(rng, 0, box), random::uniform_int(rng, 0, box));
      pts.emplace_back(raw.back().first, raw.back().second);
    }
    const int want = cover_oracle(raw);
    const auto got = min_line_cover(pts, 8);
    const std::string tag = "trial " + std::to_string(trial);
    o.check(got && static_cast<int>(got->size()) == want,
            tag + " oracle " + std::to_string(want) + " got " + (got ? std::to_string(got->size()) : "none"));
    if (got)
      for (const Point& q : pts)
        o.check(std::any_of(got->begin(), got->end(), [&](const Line& l) { return l.contains(q); }), tag + " point uncovered");
  }
  for (long k = 1; k <= 10; ++k) {
    std::vector<Point> line;
    for (long i = 0; i < k; ++i) line.emplace_back(3 * i - 7, 2 * i + 5);
    const auto got = min_line_cover(line, 8);
    o.check(got && got->size() == 1, "collinear set of " + std::to_string(k));
  }
  if (o.pass) o.detail = "100 random sets match the exhaustive oracle; collinear sets give 1";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"line meets polygon in at most floor(p/2) segments", c1},
      {"segment count bound and region tree", c2},
      {"inner polygon leaves two free segments", c3},
      {"infeasibility thresholds", c4},
      {"cubic bipartite construction", c5},
      {"series-parallel sizes", c6},
      {"nests in every embedding of A_3 and B_3", c7},
      {"near-nests in every apex-tree embedding", c8},
      {"apex-tree layout", c9},
      {"spiral two-line conversion", c10},
      {"nested hexagons on few lines", c11},
      {"minimum line cover", c12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
