#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "gw/bridge_gadgets.hpp"
#include "gw/codec.hpp"
#include "gw/error.hpp"
#include "gw/girth_gadgets.hpp"
#include "gw/io.hpp"
#include "gw/parallel.hpp"
#include "gw/rigidity.hpp"
#include "gw/search.hpp"
#include "gw/theorems.hpp"

namespace {

using nlohmann::json;

enum Exit { ok = 0, usage = 1, failed = 2, not_found = 3 };

struct Params {
  std::string kind = "bridge";
  std::string type = "bridge";
  std::string pattern = "bridge";
  std::string pattern_file;
  int n = 1, m = 3, k = 2, levels = 0;
  std::size_t length = 0;
  std::string bits, bits_b;
  std::string format = "json";
  std::string host, out = "-", layout;
  bool induced = false, cross = false;
  std::uint64_t seed = 0;
  bool seeded = false;
  std::vector<gw::VertexId> exempt;
  int jobs = 0;
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw gw::InvalidArgument("missing --host");
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gw::InvalidArgument("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-" || path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gw::InvalidArgument("cannot write " + path);
  out << text;
}

gw::Graph load_host(const Params& p) { return gw::parse_auto(read_input(p.host)); }

void require(bool cond, const std::string& what) {
  if (!cond) throw gw::InvalidArgument(what);
}

void check_n(const Params& p) { require(p.n >= 1 && p.n <= 16, "--n must be in [1, 16]"); }
void check_k(const Params& p) { require(p.k >= 2 && p.k <= 8, "--k must be in [2, 8]"); }
void check_levels(const Params& p) { require(p.levels >= 0 && p.levels <= 64, "--M must be in [0, 64]"); }

gw::Graph build_gadget(const Params& p, std::string& layout) {
  const auto& kind = p.kind;
  if (kind == "bridge") {
    require(p.n >= 1 && p.n <= 64, "--n must be in [1, 64]");
    return gw::bridge(p.n);
  }
  if (kind == "complete" || kind == "path" || kind == "cycle") {
    require(p.m >= (kind == "cycle" ? 3 : 1) && p.m <= 4096, "--m out of range");
    return kind == "complete" ? gw::complete_graph(p.m) : kind == "path" ? gw::path_graph(p.m) : gw::cycle_graph(p.m);
  }
  if (kind == "dead-end") {
    check_n(p);
    gw::DeadEndLayout l;
    auto g = gw::dead_end(p.n, &l);
    layout = json{{"clique", l.clique}, {"path", l.path}, {"hub", l.hub()}, {"tip", l.tip()}}.dump() + "\n";
    return g;
  }
  if (kind == "drive-through") {
    check_n(p);
    gw::DriveThroughLayout l;
    auto g = gw::drive_through(p.n, &l);
    json d = json::array();
    for (const auto& e : l.dead_ends) d.push_back({{"clique", e.clique}, {"path", e.path}});
    layout = json{{"clique", l.clique}, {"left", l.left}, {"right", l.right}, {"dead_ends", d}}.dump() + "\n";
    return g;
  }
  if (kind == "chain") {
    check_n(p);
    gw::ChainLayout l;
    auto g = gw::bridge_chain(p.n, gw::BitString::parse(p.bits), &l);
    layout = l.to_json();
    return g;
  }
  if (kind == "pentagon" || kind == "tower" || kind == "girth-chain") {
    check_k(p);
    check_levels(p);
    gw::TowerLayout l;
    auto g = kind == "pentagon" ? gw::pentagon(p.k, &l)
             : kind == "tower"  ? gw::pentagon_tower(p.k, p.levels, &l)
                                : gw::girth_chain(p.k, p.levels, gw::BitString::parse(p.bits), &l);
    layout = l.to_json();
    return g;
  }
  throw gw::InvalidArgument("unknown --kind " + kind);
}

int cmd_gadget(const Params& p) {
  std::string layout;
  auto g = build_gadget(p, layout);
  if (p.seeded) {
    g = gw::relabel(g, p.seed);
    layout.clear();
  }
  write_output(p.out, gw::serialize(g, gw::format_from_string(p.format)));
  if (!p.layout.empty()) {
    require(!layout.empty(), "no layout for this gadget");
    write_output(p.layout, layout);
  }
  return ok;
}

int cmd_family(const Params& p) {
  require(p.length <= 12, "--length must be <= 12");
  const auto fmt = gw::format_from_string(p.format);
  std::string text;
  for (const auto& b : gw::BitString::all(p.length)) {
    gw::Graph g;
    if (p.type == "bridge") {
      check_n(p);
      g = gw::bridge_chain(p.n, b);
    } else if (p.type == "girth") {
      check_k(p);
      check_levels(p);
      g = gw::girth_chain(p.k, p.levels, b);
    } else {
      throw gw::InvalidArgument("unknown --type " + p.type);
    }
    text += "# bits " + b.str() + "\n" + gw::serialize(g, fmt);
  }
  write_output(p.out, text);
  return ok;
}

int cmd_find(const Params& p) {
  gw::Graph pattern;
  if (!p.pattern_file.empty()) {
    pattern = gw::parse_auto(read_input(p.pattern_file));
  } else {
    Params q = p;
    q.kind = p.pattern;
    std::string unused;
    pattern = build_gadget(q, unused);
  }
  const auto host = load_host(p);
  gw::MatchOptions opts;
  opts.induced = p.induced;
  const auto e = gw::find_embedding(pattern, host, opts);
  if (!e) {
    write_output(p.out, "free\n");
    return not_found;
  }
  write_output(p.out, json{{"embedding", e->image}}.dump() + "\n");
  return ok;
}

int cmd_girth(const Params& p) {
  const auto host = load_host(p);
  const auto g = gw::girth(host, gw::Exec::parallel);
  json j;
  j["vertices"] = host.vertex_count();
  j["edges"] = host.edge_count();
  if (g) {
    j["girth"] = *g;
    j["cycle"] = *gw::short_cycle(host, *g);
  } else {
    j["girth"] = nullptr;
  }
  write_output(p.out, j.dump() + "\n");
  return ok;
}

int cmd_highways(const Params& p) {
  const auto host = load_host(p);
  json list = json::array();
  for (const auto& h : gw::highways(host))
    list.push_back({{"length", h.length()},
                    {"cyclic", h.cyclic},
                    {"end_degrees", {h.end_degrees.first, h.end_degrees.second}},
                    {"vertices", h.vertices}});
  write_output(p.out, json{{"highways", list}}.dump() + "\n");
  return ok;
}

int cmd_decode(const Params& p) {
  check_n(p);
  const auto host = load_host(p);
  try {
    write_output(p.out, gw::decode_bridge_bits(host, p.n).str() + "\n");
  } catch (const gw::DecodeError& e) {
    std::cerr << "gadgets: " << e.what() << "\n";
    return not_found;
  }
  return ok;
}

int cmd_fingerprint(const Params& p) {
  check_n(p);
  const auto host = load_host(p);
  try {
    write_output(p.out, gw::fingerprint(host, p.n).to_json());
  } catch (const gw::DecodeError& e) {
    std::cerr << "gadgets: " << e.what() << "\n";
    return not_found;
  }
  return ok;
}

int cmd_rigidity(const Params& p) {
  check_n(p);
  gw::Graph g;
  std::vector<gw::VertexId> exempt;
  std::string name;
  if (!p.host.empty()) {
    g = load_host(p);
    exempt.assign(p.exempt.begin(), p.exempt.end());
    name = p.host;
  } else if (p.kind == "dead-end") {
    gw::DeadEndLayout l;
    g = gw::dead_end(p.n, &l);
    exempt = {l.tip()};
    name = "dead_end";
  } else if (p.kind == "drive-through") {
    gw::DriveThroughLayout l;
    g = gw::drive_through(p.n, &l);
    exempt = {l.left, l.right};
    name = "drive_through";
  } else if (p.kind == "chain") {
    gw::ChainLayout l;
    g = gw::bridge_chain(p.n, gw::BitString::parse(p.bits), &l);
    exempt = {l.frontier()};
    name = "bridge_chain";
  } else {
    throw gw::InvalidArgument("rigidity needs --host or --kind dead-end|drive-through|chain");
  }
  for (auto v : exempt) require(g.contains(v), "--exempt vertex out of range");
  try {
    const auto r = gw::augmentation_sweep(g, p.n, exempt, gw::Exec::parallel, name);
    write_output(p.out, r.to_json());
    return r.pass ? ok : failed;
  } catch (const gw::NotBridgeFree& e) {
    std::cerr << "gadgets: input contains bridge(" << p.n << ")\n";
    write_output(p.out, json{{"pass", false}, {"witness", e.witness().image}}.dump() + "\n");
    return failed;
  }
}

int cmd_merge(const Params& p) {
  check_k(p);
  check_levels(p);
  const auto a = gw::BitString::parse(p.bits), b = gw::BitString::parse(p.bits_b);
  const auto r = gw::triangle_merge(p.k, p.levels, a, b);
  json j{{"k", p.k}, {"levels", p.levels}, {"a", a.str()}, {"b", b.str()}};
  bool holds;
  if (r.triangle) {
    j["position"] = *r.position;
    j["triangle"] = *r.triangle;
    const auto& t = *r.triangle;
    holds = a != b && r.graph.adjacent(t[0], t[1]) && r.graph.adjacent(t[1], t[2]) && r.graph.adjacent(t[0], t[2]);
  } else {
    const auto gi = gw::girth(r.graph);
    j["triangle"] = nullptr;
    j["girth"] = gi ? json(*gi) : json(nullptr);
    holds = a == b && (!gi || *gi > static_cast<std::size_t>(2 * p.k));
  }
  j["pass"] = holds;
  write_output(p.out, j.dump() + "\n");
  return holds ? ok : failed;
}

int cmd_demo(const Params& p) {
  gw::ReportOptions opts;
  opts.cross_embedding = p.cross;
  gw::FamilyReport r;
  if (p.type == "bridge") {
    check_n(p);
    require(p.length <= 8, "--length must be <= 8");
    r = gw::bridge_theorem_report(p.n, p.length, opts);
  } else if (p.type == "girth") {
    check_k(p);
    check_levels(p);
    require(p.length <= 8, "--length must be <= 8");
    r = gw::girth_theorem_report(p.k, p.levels, p.length, opts);
  } else {
    throw gw::InvalidArgument("unknown --type " + p.type);
  }
  write_output(p.out, r.to_json());
  return r.pass ? ok : failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forbidden-subgraph gadget builder and verifier"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  Params p;

  auto out = [&](CLI::App* c) { c->add_option("--out,-o", p.out, "output file, '-' for stdout"); };
  auto host = [&](CLI::App* c) { c->add_option("--host,--in", p.host, "graph file (json or edgelist), '-' for stdin"); };
  auto seed = [&](CLI::App* c) {
    c->add_option("--seed", p.seed, "relabel with this seed")->each([&](const std::string&) { p.seeded = true; });
  };
  auto jobs = [&](CLI::App* c) { c->add_option("--jobs,-j", p.jobs, "worker threads")->check(CLI::Range(0, 1024)); };

  auto gadget = app.add_subcommand("gadget", "build a gadget");
  gadget->add_option("--kind", p.kind, "bridge|complete|path|cycle|dead-end|drive-through|chain|pentagon|tower|girth-chain");
  gadget->add_option("--n", p.n);
  gadget->add_option("--m", p.m);
  gadget->add_option("--k", p.k);
  gadget->add_option("--M", p.levels);
  gadget->add_option("--bits", p.bits);
  gadget->add_option("--format", p.format, "json|dot|edgelist");
  gadget->add_option("--layout", p.layout, "write the role layout as JSON here");
  out(gadget);
  seed(gadget);

  auto family = app.add_subcommand("family", "build every chain of a given length");
  family->add_option("--type", p.type, "bridge|girth");
  family->add_option("--n", p.n);
  family->add_option("--k", p.k);
  family->add_option("--M", p.levels);
  family->add_option("--length,--L", p.length);
  family->add_option("--format", p.format);
  out(family);

  auto find = app.add_subcommand("find", "search for an embedding");
  find->add_option("--pattern", p.pattern, "named pattern, as for gadget --kind");
  find->add_option("--pattern-file", p.pattern_file);
  find->add_option("--n", p.n);
  find->add_option("--m", p.m);
  find->add_option("--k", p.k);
  find->add_option("--M", p.levels);
  find->add_option("--bits", p.bits);
  find->add_flag("--induced", p.induced);
  host(find);
  out(find);

  auto girth = app.add_subcommand("girth", "shortest cycle");
  host(girth);
  out(girth);
  jobs(girth);

  auto hw = app.add_subcommand("highways", "maximal degree-2 chains");
  host(hw);
  out(hw);

  auto decode = app.add_subcommand("decode", "recover bits from an unlabeled bridge chain");
  decode->add_option("--n", p.n);
  host(decode);
  out(decode);

  auto fp = app.add_subcommand("fingerprint", "structural fingerprint of a bridge chain");
  fp->add_option("--n", p.n);
  host(fp);
  out(fp);

  auto rig = app.add_subcommand("rigidity", "single-augmentation sweep");
  rig->add_option("--kind", p.kind, "dead-end|drive-through|chain");
  rig->add_option("--n", p.n);
  rig->add_option("--bits", p.bits);
  rig->add_option("--exempt", p.exempt, "exempt vertices with --host");
  host(rig);
  out(rig);
  jobs(rig);

  auto merge = app.add_subcommand("merge-demo", "merge two girth chains over one tower");
  merge->add_option("--k", p.k);
  merge->add_option("--M", p.levels);
  merge->add_option("--a", p.bits)->required();
  merge->add_option("--b", p.bits_b)->required();
  out(merge);

  auto demo = app.add_subcommand("demo", "family report");
  demo->add_option("--type", p.type, "bridge|girth");
  demo->add_option("--n", p.n);
  demo->add_option("--k", p.k);
  demo->add_option("--M", p.levels);
  demo->add_option("--length,--L", p.length);
  demo->add_flag("--cross", p.cross, "also check cross-embeddings");
  out(demo);
  jobs(demo);

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

#ifdef GW_HAS_OPENMP
  if (p.jobs > 0) omp_set_num_threads(p.jobs);
#endif

  try {
    if (*gadget) return cmd_gadget(p);
    if (*family) return cmd_family(p);
    if (*find) return cmd_find(p);
    if (*girth) return cmd_girth(p);
    if (*hw) return cmd_highways(p);
    if (*decode) return cmd_decode(p);
    if (*fp) return cmd_fingerprint(p);
    if (*rig) return cmd_rigidity(p);
    if (*merge) return cmd_merge(p);
    if (*demo) return cmd_demo(p);
  } catch (const gw::ParseError& e) {
    std::cerr << "gadgets: parse error: " << e.what() << "\n";
    return usage;
  } catch (const gw::CapacityError& e) {
    std::cerr << "gadgets: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "gadgets: " << e.what() << "\n";
    return usage;
  }
  return usage;
}
