#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "linecover/arrangement.hpp"
#include "linecover/constructions.hpp"
#include "linecover/layout.hpp"
#include "linecover/nests.hpp"
#include "linecover/random.hpp"
#include "linecover/sp.hpp"

// Property suites behind `linecover oracle` and the acceptance run. Each case
// records pass/fail and a short detail string.

namespace linecover::suites {

struct CaseResult {
  std::size_t index = 0;
  bool pass = true;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& c : cases) f += !c.pass;
    return f;
  }
  bool passed() const { return !cases.empty() && failures() == 0; }
  void add(bool pass, std::string detail = {}) { cases.push_back({cases.size(), pass, std::move(detail)}); }
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t cases = 0;  // 0 picks the suite default
  int index = 3;          // family index for the embedding suites
  std::size_t max_embeddings = std::size_t{1} << 24;
};

/// A line meets a simple p-gon in at most floor(p/2) open segments, each
/// lying inside the polygon.
inline SuiteReport lemma1(const SuiteOptions& o) {
  SuiteReport rep{"lemma1", o.seed, {}};
  random::Rng rng(o.seed);
  const std::size_t n = o.cases ? o.cases : 10000;
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = static_cast<std::size_t>(random::uniform_int(rng, 3, 12));
    const Polygon poly = random::simple_polygon(rng, p);
    const Line line = random::line_near_polygon(rng, poly);
    const auto segs = clip_line_to_polygon(line, poly);
    bool ok = segs.size() <= p / 2;
    for (const Segment& s : segs) ok = ok && locate_point(s.midpoint(), poly) == Location::inside;
    rep.add(ok, "p=" + std::to_string(p) + " segments=" + std::to_string(segs.size()));
  }
  return rep;
}

namespace detail {

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace detail

/// Arrangements with no crossing inside the polygon: at most ell*floor(p/2)
/// segments, and the regions they cut form a tree.
inline SuiteReport lemma3(const SuiteOptions& o) {
  SuiteReport rep{"lemma3", o.seed, {}};
  random::Rng rng(o.seed);
  const std::size_t n = o.cases ? o.cases : 500;
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = static_cast<std::size_t>(random::uniform_int(rng, 3, 12));
    const auto ell = static_cast<std::size_t>(random::uniform_int(rng, 1, 6));
    const Polygon poly = random::simple_polygon(rng, p, 300);
    const Arrangement arr = random::arrangement_avoiding(rng, poly, ell, 300);
    const auto dec = region_decomposition(arr, poly);
    const std::size_t k = dec.system.size(), regions = dec.regions.size();
    std::vector<std::size_t> parent(regions);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& a : dec.adjacencies) parent[detail::find_root(parent, a.first)] = detail::find_root(parent, a.second);
    bool connected = true;
    for (std::size_t r = 0; r < regions; ++r) connected = connected && detail::find_root(parent, r) == detail::find_root(parent, 0);
    const bool ok = crossings_inside(arr, poly).empty() && k <= arr.size() * (p / 2) && regions == k + 1 &&
                    dec.adjacencies.size() + 1 == regions && connected;
    rep.add(ok, "p=" + std::to_string(p) + " lines=" + std::to_string(arr.size()) + " segments=" + std::to_string(k));
  }
  return rep;
}

/// An inner polygon drawn on the segments leaves at least two of them free.
inline SuiteReport lemma4(const SuiteOptions& o) {
  SuiteReport rep{"lemma4", o.seed, {}};
  random::Rng rng(o.seed);
  const std::size_t n = o.cases ? o.cases : 200;
  for (std::size_t attempt = 0; rep.cases.size() < n && attempt < 50 * n; ++attempt) {
    const auto p = static_cast<std::size_t>(random::uniform_int(rng, 4, 12));
    const auto ell = static_cast<std::size_t>(random::uniform_int(rng, 2, 6));
    auto inst = random::free_segment_instance(rng, p, ell);
    if (!inst) continue;
    const auto freed = free_segments(inst->system, inst->inner);
    rep.add(freed.size() >= 2, "segments=" + std::to_string(inst->system.size()) + " free=" + std::to_string(freed.size()));
  }
  return rep;
}

/// Thresholds against the inequality, audits of the parallel hexnest, and
/// the concurrent-lines nest that must hold a crossing.
inline SuiteReport lemma5(const SuiteOptions& o) {
  SuiteReport rep{"lemma5", o.seed, {}};
  const std::size_t n = o.cases ? o.cases : 20;
  for (int ell = 3; ell < 3 + static_cast<int>(n); ++ell) {
    auto [spec, arr] = draw_parallel_hexnest(ell);
    const auto audit = audit_nest_against_arrangement(spec, arr);
    const int depth = static_cast<int>(spec.polygons.size());
    const int r = infeasibility_threshold(6, ell, NestKind::nest);
    const bool ok = verify_nest(spec).valid && audit.feasible && audit.segment_count <= audit.segment_bound &&
                    depth < r && 2 * (r - 1) > 3 * ell && 2 * (r - 2) <= 3 * ell;
    rep.add(ok, "ell=" + std::to_string(ell) + " depth=" + std::to_string(depth) + " threshold=" + std::to_string(r));
  }
  const Arrangement three({Line::horizontal(0), Line::vertical(0), Line::through(Point(0, 0), Point(1, 1))});
  NestSpec concurrent;
  concurrent.egg = Point(0, 0);
  for (long s = 3; s >= 1; --s)
    concurrent.polygons.emplace_back(std::vector<Point>{Point(s, 0), Point(s, s), Point(0, s), Point(-s, 0), Point(-s, -s), Point(0, -s)});
  const auto a = audit_nest_against_arrangement(concurrent, three);
  rep.add(!a.interior_crossings.empty() && !a.feasible, "concurrent lines through the egg");
  return rep;
}

inline bool terminals_on_outer_face(const Embedding& e, std::size_t s, std::size_t t) {
  const Face& f = e.faces()[*e.outer_face()];
  return std::find(f.begin(), f.end(), s) != f.end() && std::find(f.begin(), f.end(), t) != f.end();
}

/// Every embedding of A_i with both terminals on the outer face holds a
/// (6, i-1)-nest.
inline SuiteReport lemma6(const SuiteOptions& o) {
  SuiteReport rep{"lemma6", o.seed, {}};
  const int i = o.index;
  EmbeddingEnumerator en(a_expression(i), o.max_embeddings);
  const auto& real = en.realization();
  const auto cycles = enumerate_cycles(real.graph, 6);
  std::size_t k = 0;
  while (auto e = en.next()) {
    ++k;
    if (!terminals_on_outer_face(*e, real.s, real.t)) continue;
    const NestCensus census(*e, cycles);
    rep.add(census.depth() + 1 >= static_cast<std::size_t>(i),
            "embedding " + std::to_string(k - 1) + " depth=" + std::to_string(census.depth()));
  }
  return rep;
}

/// Every embedding of B_i holds 2^j - 1 disjoint (6, i-j)-nests for each
/// j <= i.
inline SuiteReport lemma7(const SuiteOptions& o) {
  SuiteReport rep{"lemma7", o.seed, {}};
  const int i = o.index;
  EmbeddingEnumerator en(b_expression(i), o.max_embeddings);
  const auto cycles = enumerate_cycles(en.realization().graph, 6);
  std::size_t k = 0;
  while (auto e = en.next()) {
    const NestCensus census(*e, cycles);
    bool ok = true;
    std::string detail = "embedding " + std::to_string(k++);
    for (int j = 1; j <= i; ++j) {
      const std::size_t found = census.disjoint(static_cast<std::size_t>(i - j)).size();
      ok = ok && found + 1 >= (std::size_t{1} << j);
      detail += " j=" + std::to_string(j) + ":" + std::to_string(found);
    }
    rep.add(ok, detail);
  }
  return rep;
}

/// Near-nest thresholds and the definition's rejections.
inline SuiteReport lemma8(const SuiteOptions& o) {
  SuiteReport rep{"lemma8", o.seed, {}};
  for (int ell = 0; ell <= 100; ++ell) {
    const int r = infeasibility_threshold(4, ell, NestKind::near_nest);
    rep.add(r - 1 > 2 * ell && r - 2 <= 2 * ell, "ell=" + std::to_string(ell) + " threshold=" + std::to_string(r));
  }
  const std::vector<Point> pos{Point(0, 0), Point(2, 0), Point(2, 2), Point(0, 2), Point(1, 1),
                               Point(-1, -1), Point(3, -1), Point(3, 3), Point(-1, 3)};
  rep.add(verify_nest(NearNestSpec{{{5, 6, 7, 8}, {0, 1, 2, 3}}, 4, pos}).valid, "disjoint squares accepted");
  rep.add(!verify_nest(NearNestSpec{{{0, 1, 2, 3}, {0, 1, 7, 8}}, 4, pos}).valid, "shared edge rejected");
  rep.add(!verify_nest(NearNestSpec{{{0, 1, 2, 3}, {0, 6, 2, 8}}, 4, pos}).valid, "two shared vertices rejected");
  return rep;
}

/// Every embedding of the height-i apex tree holds a (4, i-1)-near-nest.
inline SuiteReport lemma9(const SuiteOptions& o) {
  SuiteReport rep{"lemma9", o.seed, {}};
  const int i = o.index;
  EmbeddingEnumerator en(apex_tree_expression(i), o.max_embeddings);
  const auto cycles = enumerate_cycles(en.realization().graph, 4);
  std::size_t k = 0;
  while (auto e = en.next()) {
    const auto census = find_near_nests(*e, cycles);
    rep.add(census.depth() + 1 >= static_cast<std::size_t>(i),
            "embedding " + std::to_string(k++) + " depth=" + std::to_string(census.depth()));
  }
  return rep;
}

inline const std::vector<std::pair<std::string, std::function<SuiteReport(const SuiteOptions&)>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<SuiteReport(const SuiteOptions&)>>> all{
      {"lemma1", lemma1}, {"lemma3", lemma3}, {"lemma4", lemma4}, {"lemma5", lemma5},
      {"lemma6", lemma6}, {"lemma7", lemma7}, {"lemma8", lemma8}, {"lemma9", lemma9}};
  return all;
}

}  // namespace linecover::suites
