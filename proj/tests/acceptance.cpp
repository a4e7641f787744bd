// Acceptance gate: one PASS/FAIL line per criterion. Usage: acceptance <path-to-gadgets-cli>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gw/bridge_gadgets.hpp"
#include "gw/codec.hpp"
#include "gw/error.hpp"
#include "gw/girth_gadgets.hpp"
#include "gw/io.hpp"
#include "gw/rigidity.hpp"
#include "gw/search.hpp"
#include "gw/theorems.hpp"

using namespace gw;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (failures.size() < 8) failures.push_back(what);
    }
  }
};

Outcome freeness() {
  Outcome o;
  double worst = 0;
  std::size_t checks = 0;
  auto timed = [&](const Graph& g, int n, const std::string& name) {
    const auto t0 = Clock::now();
    const bool free = !find_bridge(g, n).has_value();
    const double s = seconds_since(t0);
    worst = std::max(worst, s);
    ++checks;
    o.expect(free, name + " contains bridge(" + std::to_string(n) + ")");
    o.expect(s < 10.0, name + " took " + std::to_string(s) + " s");
  };
  for (int n = 1; n <= 3; ++n) {
    timed(dead_end(n), n, "dead_end(" + std::to_string(n) + ")");
    timed(drive_through(n), n, "drive_through(" + std::to_string(n) + ")");
    for (std::size_t len = 0; len <= 3; ++len)
      for (const auto& b : BitString::all(len))
        timed(bridge_chain(n, b), n, "bridge_chain(" + std::to_string(n) + ",\"" + b.str() + "\")");
  }
  o.summary = std::to_string(checks) + " graphs, slowest " + std::to_string(worst) + " s";
  return o;
}

Outcome rigidity() {
  Outcome o;
  double worst = 0;
  std::size_t sweeps = 0, pendant_checks = 0;
  auto run = [&](const Graph& g, int n, std::vector<VertexId> exempt, const std::string& name) {
    const auto t0 = Clock::now();
    const auto r = augmentation_sweep(g, n, exempt, Exec::parallel, name);
    const double s = seconds_since(t0);
    worst = std::max(worst, s);
    ++sweeps;
    o.expect(r.pass, name + ": " + std::to_string(r.violations().size()) + " protected augmentations stay free");
    o.expect(s < 300.0, name + " took " + std::to_string(s) + " s");
    std::set<VertexId> ex(exempt.begin(), exempt.end());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      ++pendant_checks;
      o.expect(safe_pendant(g, n, v) == (ex.count(v) > 0), name + ": safe_pendant mismatch at " + std::to_string(v));
    }
  };
  for (int n = 1; n <= 2; ++n) {
    const auto ns = std::to_string(n);
    DeadEndLayout dl;
    const auto de = dead_end(n, &dl);
    run(de, n, {dl.tip()}, "dead_end(" + ns + ")");
    DriveThroughLayout tl;
    const auto dt = drive_through(n, &tl);
    run(dt, n, {tl.left, tl.right}, "drive_through(" + ns + ")");
    for (std::size_t len = 0; len <= 2; ++len)
      for (const auto& b : BitString::all(len)) {
        ChainLayout cl;
        const auto g = bridge_chain(n, b, &cl);
        run(g, n, {cl.frontier()}, "bridge_chain(" + ns + ",\"" + b.str() + "\")");
      }
  }
  o.summary = std::to_string(sweeps) + " sweeps, " + std::to_string(pendant_checks) + " pendant checks, slowest sweep " +
              std::to_string(worst) + " s";
  return o;
}

Outcome decode() {
  Outcome o;
  std::size_t decodes = 0;
  for (int n = 1; n <= 3; ++n) {
    const std::size_t max_len = n == 3 ? 3 : 4;
    for (std::size_t len = 0; len <= max_len; ++len)
      for (const auto& b : BitString::all(len)) {
        const auto g = bridge_chain(n, b);
        const auto name = "n=" + std::to_string(n) + " bits=\"" + b.str() + "\"";
        try {
          o.expect(decode_bridge_bits(g, n) == b, name);
          ++decodes;
          for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            o.expect(decode_bridge_bits(relabel(g, seed), n) == b, name + " seed " + std::to_string(seed));
            ++decodes;
          }
        } catch (const std::exception& e) {
          o.expect(false, name + ": " + e.what());
        }
      }
  }
  o.summary = std::to_string(decodes) + " exact round trips";
  return o;
}

Outcome distinctness() {
  Outcome o;
  std::ostringstream s;
  for (auto [n, len] : {std::pair{2, std::size_t{4}}, {1, std::size_t{3}}}) {
    std::set<std::string> prints;
    const auto all = BitString::all(len);
    for (std::size_t i = 0; i < all.size(); ++i)
      prints.insert(fingerprint(relabel(bridge_chain(n, all[i]), 1000 + i), n).to_json());
    o.expect(prints.size() == all.size(), "n=" + std::to_string(n) + ": only " + std::to_string(prints.size()) + " distinct");
    s << "n=" << n << " L=" << len << ": " << prints.size() << "/" << all.size() << " distinct; ";
  }
  o.summary = s.str();
  return o;
}

Outcome census() {
  Outcome o;
  const int n = 2;
  ChainLayout l;
  const auto g = bridge_chain(n, BitString::parse("10"), &l);
  const auto hws = highways(g);
  std::size_t special = 0, dead_end_hw = 0, pendant = 0;
  std::vector<std::size_t> connectors;
  for (const auto& h : hws) {
    const auto [a, b] = h.end_degrees;
    const auto hi = std::max(a, b), lo = std::min(a, b);
    if (hi == n + 3u) {
      if (h.length() == n + 2u) {
        ++special;
      } else {
        ++dead_end_hw;
        o.expect(h.length() == n + 1u, "dead-end highway of length " + std::to_string(h.length()));
      }
    } else if (lo == 1) {
      ++pendant;
      o.expect(h.front() == l.frontier() || h.back() == l.frontier(), "pendant highway away from the frontier");
    } else if (lo == n + 2u && hi == n + 2u) {
      connectors.push_back(h.length());
    } else {
      o.expect(false, "unexpected highway class");
    }
  }
  o.expect(special == 1, "special highways: " + std::to_string(special));
  o.expect(dead_end_hw == l.drive_throughs.size() * n, "dead-end highways: " + std::to_string(dead_end_hw));
  // Connecting highways in chain order, from the layout.
  std::vector<std::size_t> ordered;
  for (std::size_t m = 0; m < l.connectors.size(); ++m) {
    const auto from = l.drive_throughs[m].clique.back();
    for (const auto& h : hws)
      if (h.front() == from || h.back() == from)
        if (h.end_degrees.first == n + 2u && h.end_degrees.second == n + 2u) ordered.push_back(h.length());
  }
  o.expect(ordered == std::vector<std::size_t>{4, 3}, "connector lengths out of order");
  std::multiset<std::size_t> conn(connectors.begin(), connectors.end());
  o.expect(conn == std::multiset<std::size_t>{3, 4}, "connector lengths");
  o.expect(pendant == 1, "pendant highways: " + std::to_string(pendant));
  const auto fp = fingerprint(g, n);
  for (auto [len, lo, hi] : fp.census) o.expect(lo != 1, "fingerprint keeps a degree-1 highway");
  o.expect(fp.census.size() + 1 == hws.size(), "fingerprint census size");
  o.summary = std::to_string(hws.size()) + " highways: 1 special (length 4), " + std::to_string(dead_end_hw) +
              " dead-end (length 3), connectors [" + std::to_string(ordered.size() > 0 ? ordered[0] : 0) + "," +
              std::to_string(ordered.size() > 1 ? ordered[1] : 0) + "], pendant excluded from fingerprint";
  return o;
}

Outcome girth_suite() {
  Outcome o;
  std::ostringstream s;
  for (int k = 2; k <= 4; ++k) {
    const auto gi = girth(pentagon(k));
    o.expect(gi == static_cast<std::size_t>(5 * k), "girth(pentagon(" + std::to_string(k) + "))");
  }
  std::size_t degree_failures = 0;
  for (int k = 2; k <= 3; ++k)
    for (int M = 0; M <= 4; ++M) {
      const auto t = pentagon_tower(k, M);
      const auto gi = girth(t);
      const auto tag = "pentagon_tower(" + std::to_string(k) + "," + std::to_string(M) + ")";
      o.expect(gi && *gi > static_cast<std::size_t>(2 * k), tag + " girth");
      if (t.max_degree() > 3) {
        ++degree_failures;
        o.expect(false, tag + " max degree " + std::to_string(t.max_degree()));
      }
    }
  std::size_t chains = 0, skipped = 0;
  for (int k = 2; k <= 3; ++k)
    for (int M = 0; M <= 4; ++M)
      for (std::size_t len = 0; len <= 3; ++len)
        for (const auto& b : BitString::all(len)) {
          try {
            const auto g = girth_chain(k, M, b);
            const auto gi = girth(g);
            ++chains;
            o.expect(!gi || *gi > static_cast<std::size_t>(2 * k),
                     "girth_chain(" + std::to_string(k) + "," + std::to_string(M) + ",\"" + b.str() + "\")");
          } catch (const CapacityError&) {
            ++skipped;
          }
        }
  s << "pentagon girth 5k for k=2..4; towers k=2,3 M<=4 girth > 2k; " << degree_failures
    << " towers exceed max degree 3; " << chains << " chains girth > 2k, " << skipped << " over capacity";
  o.summary = s.str();
  return o;
}

Outcome corner() {
  Outcome o;
  std::size_t pin_sets = 0;
  for (int k = 2; k <= 3; ++k)
    for (int M = 0; M <= 3; ++M) {
      TowerLayout l;
      const auto t = pentagon_tower(k, M, &l);
      TowerLayout pl;
      const auto p = pentagon(k, &pl);
      std::set<std::array<VertexId, 5>> pins;
      for (const auto& c : l.corners) pins.insert(c);
      for (const auto& e : enumerate_embeddings(p, t, {}, 4000)) {
        std::array<VertexId, 5> c{};
        for (int i = 0; i < 5; ++i) c[static_cast<std::size_t>(i)] = e.image[pl.corners[0][static_cast<std::size_t>(i)]];
        pins.insert(c);
      }
      for (const auto& c : pins) {
        ++pin_sets;
        const auto count = corner_rigidity(k, t, c);
        o.expect(count <= 1, "k=" + std::to_string(k) + " M=" + std::to_string(M) + " count " + std::to_string(count));
      }
    }
  std::ostringstream s;
  s << pin_sets << " pin sets from S_k copies rigid";
  for (int k = 2; k <= 3; ++k) {
    const auto host = complete_graph(5 * k);
    const auto count = count_corner_embeddings(k, host, {0, 1, 2, 3, 4}, 2);
    bool refused = false;
    try {
      corner_rigidity(k, host, {0, 1, 2, 3, 4});
    } catch (const PreconditionError&) {
      refused = true;
    }
    o.expect(count > 1, "K_" + std::to_string(5 * k) + " counterexample count " + std::to_string(count));
    o.expect(refused, "corner_rigidity accepted a host with small girth");
    s << "; K_" << 5 * k << ": " << (count > 1 ? ">1" : std::to_string(count)) << " embeddings";
  }
  o.summary = s.str();
  return o;
}

Outcome triangles(int levels) {
  Outcome o;
  std::size_t pairs = 0, witnesses = 0, errors = 0;
  for (std::size_t len = 0; len <= 3; ++len) {
    const auto all = BitString::all(len);
    for (const auto& a : all)
      for (const auto& b : all) {
        ++pairs;
        try {
          const auto r = triangle_merge(2, levels, a, b);
          if (a == b) {
            o.expect(!r.triangle && !short_cycle(r.graph, 3), "equal \"" + a.str() + "\" gave a triangle");
          } else {
            const bool ok = r.triangle && r.graph.adjacent((*r.triangle)[0], (*r.triangle)[1]) &&
                            r.graph.adjacent((*r.triangle)[1], (*r.triangle)[2]) &&
                            r.graph.adjacent((*r.triangle)[0], (*r.triangle)[2]);
            witnesses += ok;
            o.expect(ok, "\"" + a.str() + "\" vs \"" + b.str() + "\" no triangle");
          }
        } catch (const CapacityError& e) {
          ++errors;
          o.expect(false, "length " + std::to_string(len) + ": " + e.what());
        }
      }
  }
  o.summary = "k=2 M=" + std::to_string(levels) + ": " + std::to_string(pairs) + " ordered pairs, " +
              std::to_string(witnesses) + " triangle witnesses, " + std::to_string(errors) + " over capacity";
  return o;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome cli(const std::string& exe) {
  Outcome o;
  if (exe.empty()) {
    o.expect(false, "no CLI path given");
    return o;
  }
  const auto dir = std::filesystem::temp_directory_path() / ("gw_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const auto de1 = (dir / "de1.json").string();
  const auto chain = (dir / "chain.json").string();
  const auto junk = (dir / "junk.txt").string();
  std::ofstream(junk) << "0 1\n1 banana\n";
  const std::string q = "'" + exe + "'";
  run(q + " gadget --kind dead-end --n 1 --out " + de1);
  run(q + " gadget --kind chain --n 2 --bits 101 --seed 7 --out " + chain);

  struct Case {
    std::string args;
    int code;
  };
  const std::vector<Case> corpus{
      {"gadget --kind bridge --n 2 --format edgelist", 0},
      {"gadget --kind bridge --n 2 --format dot", 0},
      {"gadget --kind chain --n 2 --bits 0110", 0},
      {"gadget --kind chain --n 1 --bits 01 --seed 3", 0},
      {"gadget --kind tower --k 2 --M 3 --format edgelist", 0},
      {"gadget --kind girth-chain --k 2 --M 16 --bits 101", 0},
      {"family --type bridge --n 1 --length 2", 0},
      {"find --pattern bridge --n 1 --host " + de1, 3},
      {"find --pattern cycle --m 3 --host " + de1, 0},
      {"girth --host " + de1, 0},
      {"highways --host " + chain, 0},
      {"decode --n 2 --host " + chain, 0},
      {"decode --n 1 --host " + de1, 3},
      {"fingerprint --n 2 --host " + chain, 0},
      {"rigidity --kind dead-end --n 1", 0},
      {"rigidity --kind drive-through --n 1", 0},
      {"rigidity --n 1 --host " + de1, 2},
      {"merge-demo --k 2 --M 4 --a 1 --b 0", 0},
      {"merge-demo --k 2 --M 4 --a 1 --b 1", 0},
      {"demo --type bridge --n 2 --length 3", 0},
      {"demo --type bridge --n 1 --length 2 --cross", 0},
      {"demo --type girth --k 2 --M 4 --length 1", 0},
      {"gadget --kind cycle --m 2", 1},
      {"gadget --kind dead-end --n 0", 1},
      {"gadget --kind nonsense", 1},
      {"girth --host " + junk, 1},
      {"girth --host " + (dir / "missing.json").string(), 1},
      {"frobnicate", 1},
      {"demo --type girth --k 2 --M 4 --length 2", 1},
  };
  std::size_t checked = 0;
  for (const auto& c : corpus) {
    const auto a = run(q + " " + c.args), b = run(q + " " + c.args);
    ++checked;
    o.expect(a.code == c.code, "'" + c.args + "' exit " + std::to_string(a.code) + ", expected " + std::to_string(c.code));
    o.expect(a.code == b.code && a.out == b.out, "'" + c.args + "' not byte-reproducible");
  }
  // The bridge(2) edgelist example: 6 edge lines.
  const auto bl = run(q + " gadget --kind bridge --n 2 --format edgelist").out;
  o.expect(std::count(bl.begin(), bl.end(), '\n') == 6, "bridge(2) edgelist line count");
  o.expect(run(q + " find --pattern bridge --n 1 --host " + de1).out == "free\n", "find output is not 'free'");

  // Emitted graphs re-parse to themselves.
  for (const auto& args : {"gadget --kind chain --n 2 --bits 10", "gadget --kind girth-chain --k 2 --M 4 --bits 1",
                           "gadget --kind drive-through --n 3"}) {
    const auto js = run(q + " " + args).out;
    try {
      const auto g = parse(js, Format::json);
      o.expect(serialize(g, Format::json) == js, std::string(args) + " json round trip");
      const auto el = serialize(g, Format::edgelist);
      o.expect(serialize(parse(el, Format::edgelist), Format::edgelist) == el, std::string(args) + " edgelist round trip");
    } catch (const std::exception& e) {
      o.expect(false, std::string(args) + ": " + e.what());
    }
  }
  std::filesystem::remove_all(dir);
  o.summary = std::to_string(checked) + " invocations run twice, exit codes and bytes stable; json/edgelist round trips";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string exe = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "freeness", freeness},
      {2, "rigidity", rigidity},
      {3, "decode round trip", decode},
      {4, "distinctness", distinctness},
      {5, "highway census", census},
      {6, "girth", girth_suite},
      {7, "corner rigidity", corner},
      {8, "triangle emergence", [] { return triangles(4); }},
      {9, "determinism and formats", [&] { return cli(exe); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.expect(false, std::string("threw: ") + e.what());
    }
    std::printf("[%s] %d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds_since(t0),
                o.summary.c_str());
    for (const auto& f : o.failures) std::printf("       - %s\n", f.c_str());
    failed += !o.pass;
    if (c.id == 8 && !o.pass) {
      const auto big = triangles(16);
      std::printf("       info: same check on a taller tower: %s %s\n", big.pass ? "pass," : "fail,", big.summary.c_str());
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
