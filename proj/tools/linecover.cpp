#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "linecover/io.hpp"
#include "linecover/suites.hpp"

using namespace linecover;
namespace io = linecover::io;
using io::json;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 1;
  std::string output = "-";
  std::string format = "json";
};

std::uint64_t default_seed() {
  if (const char* s = std::getenv("LINECOVER_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(s, &used);
      if (used == std::string(s).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("LINECOVER_SEED is not an integer: ") + s);
  }
  return 1;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_input(path));
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Writes through a temporary file in the same directory, then renames.
void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
    if (!out.flush()) throw UsageError("cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

// Summaries go to stdout only when the payload went to a file.
std::ostream& summary(const Common& c) { return c.output == "-" ? std::cerr : std::cout; }

const json& graph_section(const json& j) { return j.contains("graph") ? j.at("graph") : j; }

std::string render(const Common& c, const json& j, const Graph& g, const Drawing* d, const std::vector<Line>& lines = {},
                   const std::vector<VertexRole>& roles = {}) {
  if (c.format == "dot") return io::to_dot(g, roles);
  if (c.format == "svg") {
    if (!d) throw UsageError("svg output needs a drawing");
    return io::to_svg(g, *d, lines);
  }
  return j.dump(2) + "\n";
}

void add_common(CLI::App* app, Common& c) {
  app->add_option("--seed", c.seed, "random seed (default: $LINECOVER_SEED or 1)");
  app->add_option("-o,--output", c.output, "output file, - for stdout")->capture_default_str();
  app->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "dot", "svg"}))
      ->capture_default_str();
}

// gen

struct GenConfig {
  Common common;
  std::string family;
  int lines = 3;
  std::string variant = "hexgrid";
  std::string kind = "A";
  int index = 3;
  int height = 3;
};

int cmd_gen(const GenConfig& cfg) {
  ConstructedGraph c;
  if (cfg.family == "cubic") {
    if (cfg.lines < 1) throw UsageError("--lines must be positive");
    c = build_counterexample(cfg.lines, cfg.variant == "zigzag" ? Variant::zigzag : Variant::hexgrid);
  } else if (cfg.family == "sp") {
    if (cfg.index < 1) throw UsageError("--index must be positive");
    c = build_series_parallel(cfg.index, cfg.kind == "B" ? SPKind::B : SPKind::A);
  } else {
    if (cfg.height < 1) throw UsageError("--height must be positive");
    c = build_apex_tree(cfg.height);
  }
  const PropertyReport props = check_properties(c.graph);
  const VerificationReport ver = verify_drawing(c.graph, c.drawing);

  json j;
  j["seed"] = cfg.common.seed;
  const json body = io::to_json(c);
  for (auto& [k, v] : body.items()) j[k] = v;
  json checks{{"cubic", props.cubic},
              {"subcubic", props.subcubic},
              {"bipartite", props.bipartite},
              {"connected", props.connected},
              {"drawing_planar", ver.planar}};
  if (cfg.family == "cubic") checks["three_connected"] = is_k_connected(c.graph, 3);
  j["checks"] = checks;
  write_output(cfg.common.output, render(cfg.common, j, c.graph, &c.drawing, {}, c.roles));

  auto& out = summary(cfg.common);
  out << "family=" << c.family << " n=" << c.graph.vertex_count() << " m=" << c.graph.edge_count();
  if (cfg.family == "cubic") out << " subunits=" << c.subunits.size();
  if (cfg.family == "sp") out << " kind=" << cfg.kind << " i=" << cfg.index;
  if (cfg.family == "apex") out << " height=" << cfg.height;
  for (auto& [k, v] : checks.items()) out << " " << k << "=" << (v.get<bool>() ? "true" : "false");
  out << " seed=" << cfg.common.seed << "\n";
  return ver.planar ? ok : failed;
}

// layout

struct LayoutConfig {
  Common common;
  std::string algo;
  std::string input;
  std::size_t root = 0;
  std::vector<std::size_t> apex;
  bool apex_none = false;
  int lines = 7;
  long base = 0;
};

// A nest drawing as a graph: one cycle per polygon, the egg last.
std::pair<Graph, Drawing> nest_graph(const NestSpec& spec) {
  Graph g;
  Drawing d;
  for (const Polygon& p : spec.polygons) {
    const std::size_t first = g.vertex_count();
    for (const Point& v : p.vertices()) {
      g.add_vertex();
      d.position.push_back(v);
    }
    for (std::size_t i = 0; i < p.vertices().size(); ++i)
      g.add_edge(first + i, first + (i + 1) % p.vertices().size());
  }
  g.add_vertex();
  d.position.push_back(spec.egg);
  return {std::move(g), std::move(d)};
}

int cmd_layout(const LayoutConfig& cfg) {
  json j;
  j["seed"] = cfg.common.seed;
  j["algo"] = cfg.algo;
  Graph g;
  Drawing d;
  std::vector<Line> lines;
  bool pass = true;

  if (cfg.algo == "apex-tree") {
    const Graph tree = io::graph_from_json(graph_section(read_json(cfg.input)));
    std::vector<std::size_t> hooks = cfg.apex;
    if (hooks.empty() && !cfg.apex_none)
      for (std::size_t v = 0; v < tree.vertex_count(); ++v) hooks.push_back(v);
    const ApexTreeDrawing at = draw_apex_tree(tree, cfg.root, hooks);
    g = at.graph;
    d = at.drawing;
    std::set<Rational> levels;
    for (std::size_t v = 0; v < tree.vertex_count(); ++v) levels.insert(d.position[v].y);
    j["apex"] = at.apex;
    j["tree_levels"] = levels.size();
    j["horizontal_lines"] = levels.size() + 1;
    for (const Rational& y : levels) lines.push_back(Line::horizontal(y));
    lines.push_back(Line::horizontal(d.position[at.apex].y));
    summary(cfg.common) << "n=" << tree.vertex_count() << " tree_levels=" << levels.size()
                        << " horizontal_lines=" << levels.size() + 1;
  } else if (cfg.algo == "spiral") {
    const LeveledDrawing ld = io::leveled_from_json(read_json(cfg.input));
    g = ld.graph;
    d = spiral_two_lines(ld, cfg.base);
    bool axes = true;
    for (const Point& p : d.position) axes = axes && (p.x == 0 || p.y == 0);
    j["on_two_lines"] = axes;
    pass = axes;
    lines = {Line::horizontal(0), Line::vertical(0)};
    summary(cfg.common) << "n=" << g.vertex_count() << " on_two_lines=" << (axes ? "true" : "false");
  } else {
    if (cfg.lines < 3) throw UsageError("--lines must be at least 3");
    NestSpec spec;
    Arrangement arr;
    if (cfg.algo == "hexnest-parallel") {
      std::tie(spec, arr) = draw_parallel_hexnest(cfg.lines);
    } else {
      HexnestResult f = draw_fig7_hexnest(cfg.lines);
      j["target"] = f.target;
      j["target_met"] = f.target_met;
      j["method"] = f.method;
      spec = std::move(f.nest);
      arr = std::move(f.arrangement);
    }
    const NestCheck check = verify_nest(spec);
    const NestAudit audit = audit_nest_against_arrangement(spec, arr);
    j["lines"] = cfg.lines;
    j["depth"] = spec.polygons.size();
    j["nest"] = io::to_json(spec);
    j["nest_valid"] = check.valid;
    if (!check.valid) j["nest_violation"] = check.violation;
    j["arrangement"] = io::to_json(arr);
    j["audit"] = io::to_json(audit);
    pass = check.valid && audit.on_lines && audit.interior_crossings.empty();
    std::tie(g, d) = nest_graph(spec);
    lines = arr.lines();
    summary(cfg.common) << "lines=" << cfg.lines << " depth=" << spec.polygons.size();
    if (j.contains("target"))
      summary(cfg.common) << " target=" << j["target"] << " target_met=" << (j["target_met"].get<bool>() ? "true" : "false");
  }

  const VerificationReport ver = verify_drawing(g, d);
  pass = pass && ver.planar;
  j["graph"] = io::to_json(g);
  j["positions"] = io::positions_to_json(d);
  j["verification"] = io::to_json(ver);
  write_output(cfg.common.output, render(cfg.common, j, g, &d, lines));
  summary(cfg.common) << " planar=" << (ver.planar ? "true" : "false") << " seed=" << cfg.common.seed << "\n";
  return pass ? ok : failed;
}

// verify

struct VerifyConfig {
  Common common;
  std::string input;
  int max_lines = 0;
};

int cmd_verify(const VerifyConfig& cfg) {
  const json in = read_json(cfg.input);
  const Graph g = io::graph_from_json(graph_section(in));
  if (!in.contains("positions")) throw UsageError("input has no positions");
  const Drawing d = io::drawing_from_json(in.at("positions"));
  if (d.position.size() != g.vertex_count()) throw UsageError("positions do not match the vertex count");
  const VerificationReport r = verify_drawing(g, d, cfg.max_lines);
  json j;
  j["seed"] = cfg.common.seed;
  const json body = io::to_json(r);
  for (auto& [k, v] : body.items()) j[k] = v;
  bool pass = r.planar;
  if (cfg.max_lines > 0) {
    j["max_lines"] = cfg.max_lines;
    pass = pass && r.line_cover_size && *r.line_cover_size <= static_cast<std::size_t>(cfg.max_lines);
  }
  j["pass"] = pass;
  write_output(cfg.common.output, render(cfg.common, j, g, &d, r.cover));
  auto& out = summary(cfg.common);
  out << "planar=" << (r.planar ? "true" : "false") << " violations=" << r.violation_count;
  if (r.line_cover_size) out << " line_cover=" << *r.line_cover_size;
  if (r.cover_over_budget) out << " line_cover>" << cfg.max_lines;
  if (r.cover_skipped) out << " line_cover=skipped";
  out << " seed=" << cfg.common.seed << "\n";
  return pass ? ok : failed;
}

// oracle

struct OracleConfig {
  Common common;
  std::string suite;
  std::size_t cases = 0;
  int index = 3;
  std::size_t max_embeddings = std::size_t{1} << 24;
};

int cmd_oracle(const OracleConfig& cfg) {
  const auto& reg = suites::registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == cfg.suite; });
  if (it == reg.end()) throw UsageError("unknown suite " + cfg.suite);
  if (cfg.index < 1) throw UsageError("--index must be positive");
  if (cfg.max_embeddings == 0) throw UsageError("--max-embeddings must be positive");
  suites::SuiteOptions o;
  o.seed = cfg.common.seed;
  o.cases = cfg.cases;
  o.index = cfg.index;
  o.max_embeddings = cfg.max_embeddings;
  const suites::SuiteReport rep = it->second(o);
  json j;
  j["suite"] = rep.name;
  j["seed"] = rep.seed;
  j["cases"] = rep.cases.size();
  j["failures"] = rep.failures();
  j["passed"] = rep.passed();
  json results = json::array();
  for (const auto& c : rep.cases) results.push_back({{"index", c.index}, {"pass", c.pass}, {"detail", c.detail}});
  j["results"] = std::move(results);
  if (cfg.common.format != "json") throw UsageError("oracle writes json only");
  write_output(cfg.common.output, j.dump(2) + "\n");
  summary(cfg.common) << "suite=" << rep.name << " cases=" << rep.cases.size() << " failures=" << rep.failures()
                      << " seed=" << rep.seed << "\n";
  return rep.passed() ? ok : failed;
}

// nests

struct NestsConfig {
  Common common;
  std::string input;
  std::size_t p = 6;
  bool near = false;
  std::size_t cycle_limit = 100000;
};

int cmd_nests(const NestsConfig& cfg) {
  const json in = read_json(cfg.input);
  const json& gj = graph_section(in);
  Embedding emb;
  if (gj.contains("rotation")) {
    emb = io::embedding_from_json(gj);
  } else if (in.contains("positions")) {
    const Graph g = io::graph_from_json(gj);
    const Drawing d = io::drawing_from_json(in.at("positions"));
    if (!verify_drawing(g, d).planar) throw UsageError("input drawing is not planar");
    emb = embedding_from_drawing(g, d);
  } else {
    throw UsageError("input needs a rotation system or positions");
  }
  if (!emb.outer_face()) throw UsageError("input has no outer face");
  if (cfg.p < 3) throw UsageError("--p must be at least 3");
  if (cfg.cycle_limit == 0) throw UsageError("--cycle-limit must be positive");
  const auto cycles = enumerate_cycles(emb.graph(), cfg.p, cfg.cycle_limit);
  json j;
  j["seed"] = cfg.common.seed;
  j["p"] = cfg.p;
  j["kind"] = cfg.near ? "near_nest" : "nest";
  j["cycles"] = cycles.size();
  std::size_t depth = 0;
  if (cfg.near) {
    const NearNestCensus census = find_near_nests(emb, cycles);
    depth = census.depth();
    j["depth"] = depth;
    json best;
    for (const Nest& n : census.by_egg)
      if (n.depth() == depth) {
        best = io::to_json(n);
        break;
      }
    j["deepest"] = best;
  } else {
    const NestCensus census(emb, cycles);
    depth = census.depth();
    j["depth"] = depth;
    j["deepest"] = io::to_json(census.deepest());
    json disjoint = json::array();
    for (std::size_t d = 1; d <= depth; ++d) disjoint.push_back({{"min_depth", d}, {"count", census.disjoint(d).size()}});
    j["disjoint"] = std::move(disjoint);
  }
  if (cfg.common.format != "json") throw UsageError("nests writes json only");
  write_output(cfg.common.output, j.dump(2) + "\n");
  summary(cfg.common) << "kind=" << (cfg.near ? "near_nest" : "nest") << " p=" << cfg.p << " cycles=" << cycles.size()
                      << " depth=" << depth << " seed=" << cfg.common.seed << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graphs that need many lines, drawings on few lines, and exact checks."};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  try {
    seed = default_seed();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }

  GenConfig gen;
  LayoutConfig lay;
  VerifyConfig ver;
  OracleConfig ora;
  NestsConfig nst;
  gen.common.seed = lay.common.seed = ver.common.seed = ora.common.seed = nst.common.seed = seed;

  auto* g = app.add_subcommand("gen", "build a graph family");
  add_common(g, gen.common);
  g->add_option("--family", gen.family)->required()->check(CLI::IsMember({"cubic", "sp", "apex"}));
  g->add_option("--lines", gen.lines, "cubic: number of lines the graph defeats")->capture_default_str();
  g->add_option("--variant", gen.variant)->check(CLI::IsMember({"hexgrid", "zigzag"}))->capture_default_str();
  g->add_option("--kind", gen.kind)->check(CLI::IsMember({"A", "B"}))->capture_default_str();
  g->add_option("--index", gen.index, "sp: recursion index")->capture_default_str();
  g->add_option("--height", gen.height, "apex: tree height")->capture_default_str();

  auto* l = app.add_subcommand("layout", "draw on few lines");
  add_common(l, lay.common);
  l->add_option("--algo", lay.algo)
      ->required()
      ->check(CLI::IsMember({"apex-tree", "spiral", "hexnest-parallel", "hexnest-fig7"}));
  l->add_option("-i,--input", lay.input, "tree graph (apex-tree) or leveled drawing (spiral)");
  l->add_option("--root", lay.root)->capture_default_str();
  l->add_option("--apex", lay.apex, "apex neighbours (default: every tree vertex)");
  l->add_flag("--no-apex-edges", lay.apex_none, "apex with no neighbours");
  l->add_option("--lines", lay.lines, "hexnest: number of lines")->capture_default_str();
  l->add_option("--base", lay.base, "spiral: radial base (default 4(n+1))");

  auto* v = app.add_subcommand("verify", "check a drawing");
  add_common(v, ver.common);
  v->add_option("-i,--input", ver.input)->required();
  v->add_option("--max-lines", ver.max_lines, "also require a line cover of at most this size");

  auto* o = app.add_subcommand("oracle", "run a property suite");
  add_common(o, ora.common);
  o->add_option("--suite", ora.suite)->required();
  o->add_option("--cases", ora.cases, "case count (0: suite default)");
  o->add_option("--index", ora.index, "family index for lemma6, lemma7, lemma9")->capture_default_str();
  o->add_option("--max-embeddings", ora.max_embeddings)->capture_default_str();

  auto* n = app.add_subcommand("nests", "find nests in an embedded graph");
  add_common(n, nst.common);
  n->add_option("-i,--input", nst.input)->required();
  n->add_option("--p", nst.p, "cycle length")->capture_default_str();
  n->add_flag("--near", nst.near, "near-nests instead of nests");
  n->add_option("--cycle-limit", nst.cycle_limit)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*l) {
      if ((lay.algo == "apex-tree" || lay.algo == "spiral") && lay.input.empty())
        throw UsageError("--input is required for " + lay.algo);
      if (lay.base != 0 && lay.base < 2) throw UsageError("--base must be at least 2");
      return cmd_layout(lay);
    }
    if (*v) {
      if (ver.max_lines < 0) throw UsageError("--max-lines must be positive");
      return cmd_verify(ver);
    }
    if (*o) return cmd_oracle(ora);
    if (*n) return cmd_nests(nst);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const io::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const EnumerationLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const SearchLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
