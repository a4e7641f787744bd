#include "gw/theorems.hpp"

#include <json.hpp>
#include <set>

#include "gw/bridge_gadgets.hpp"
#include "gw/error.hpp"
#include "gw/rigidity.hpp"
#include "gw/search.hpp"

namespace gw {

namespace {

template <class F>
void for_each_index(std::size_t count, Exec exec, F&& body) {
  const auto n = static_cast<long long>(count);
  if (exec == Exec::serial) {
    for (long long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
  }
}

bool all_members(const FamilyReport& r, bool MemberResult::*flag) {
  for (const auto& m : r.members)
    if (!(m.*flag)) return false;
  return true;
}

void finish(FamilyReport& r) {
  r.checks.insert(r.checks.begin(), {{"forbidden-free", all_members(r, &MemberResult::forbidden_free), ""},
                                     {"round-trip", all_members(r, &MemberResult::round_trip), ""}});
  r.pass = true;
  for (const auto& c : r.checks) r.pass = r.pass && c.pass;
  for (const auto& m : r.members) r.pass = r.pass && m.error.empty();
}

}  // namespace

FamilyReport bridge_theorem_report(int n, std::size_t length, const ReportOptions& opts) {
  if (n < 1) throw InvalidArgument("bridge report: n must be >= 1");
  FamilyReport r;
  r.type = "bridge";
  r.n = n;
  r.length = length;
  const auto all = BitString::all(length);
  r.members.resize(all.size());
  std::vector<std::optional<Fingerprint>> prints(all.size());

  for_each_index(all.size(), opts.exec, [&](std::size_t i) {
    auto& m = r.members[i];
    m.bits = all[i];
    try {
      const auto g = bridge_chain(n, m.bits);
      m.forbidden_free = !find_bridge(g, n).has_value();
      const auto relabeled = relabel(g, i + 1);
      m.round_trip = decode_bridge_bits(g, n) == m.bits && decode_bridge_bits(relabeled, n) == m.bits;
      prints[i] = fingerprint(relabeled, n);
      m.fingerprint = prints[i]->to_json();
      m.fingerprint.pop_back();
    } catch (const std::exception& e) {
      m.error = e.what();
    }
  });

  std::set<std::string> distinct;
  for (const auto& m : r.members)
    if (m.error.empty()) distinct.insert(m.fingerprint);
  r.distinct = distinct.size();
  r.checks.push_back({"distinct-fingerprints", r.distinct == all.size(),
                      std::to_string(r.distinct) + " of " + std::to_string(all.size())});

  ChainLayout layout;
  const auto rep = bridge_chain(n, all.front(), &layout);
  const VertexId frontier = layout.frontier();
  try {
    const auto sweep = augmentation_sweep(rep, n, {&frontier, 1}, opts.exec, "bridge_chain");
    r.checks.push_back({"rigidity-sweep:" + all.front().str(), sweep.pass,
                        std::to_string(sweep.outcomes.size()) + " augmentations, " +
                            std::to_string(sweep.safe_count()) + " safe"});
  } catch (const std::exception& e) {
    r.checks.push_back({"rigidity-sweep:" + all.front().str(), false, e.what()});
  }
  if (opts.cross_embedding) r.checks.push_back(cross_embedding_check(n, length));
  finish(r);
  return r;
}

MergeResult triangle_merge(int k, int levels, const BitString& a, const BitString& b) {
  if (a.size() != b.size()) throw InvalidArgument("triangle_merge: bit strings differ in length");
  MergeResult out;
  const auto tower = pentagon_tower(k, levels, &out.layout);
  out.layout.spread = spread_vertices(tower, out.layout.corners[0][0], k, a.size() + 1);
  const auto& v = out.layout.spread;
  GraphBuilder g(tower);
  for (std::size_t m = 0; m < v.size(); ++m) g.set_role(v[m], {RoleKind::spread_v, {static_cast<int>(m)}});
  out.layout.helpers.assign(a.size(), std::nullopt);
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] == 1 || b[m] == 1) g.add_edge(v[m], v[m + 1]);
    if (a[m] == 0 || b[m] == 0) {
      auto u = g.add_vertex({RoleKind::helper_u, {static_cast<int>(m)}});
      g.add_edge(u, v[m]);
      g.add_edge(u, v[m + 1]);
      out.layout.helpers[m] = u;
    }
    if (a[m] != b[m] && !out.position) {
      out.position = m;
      out.triangle = std::array<VertexId, 3>{v[m], *out.layout.helpers[m], v[m + 1]};
    }
  }
  out.graph = std::move(g).finalize();
  return out;
}

FamilyReport girth_theorem_report(int k, int levels, std::size_t length, const ReportOptions& opts) {
  FamilyReport r;
  r.type = "girth";
  r.k = k;
  r.levels = levels;
  r.length = length;
  TowerLayout base;
  const auto tower = pentagon_tower(k, levels, &base);
  spread_vertices(tower, base.corners[0][0], k, length + 1);  // capacity check up front

  const auto all = BitString::all(length);
  r.members.resize(all.size());
  const auto bound = static_cast<std::size_t>(2 * k);
  for_each_index(all.size(), opts.exec, [&](std::size_t i) {
    auto& m = r.members[i];
    m.bits = all[i];
    try {
      TowerLayout layout;
      const auto g = girth_chain(k, levels, m.bits, &layout);
      const auto gi = girth(g, Exec::serial);
      m.forbidden_free = !gi || *gi > bound;
      m.round_trip = decode_girth_bits(g, layout) == m.bits;
    } catch (const std::exception& e) {
      m.error = e.what();
    }
  });
  std::set<std::string> decoded;
  for (const auto& m : r.members)
    if (m.round_trip) decoded.insert(m.bits.str());
  r.distinct = decoded.size();

  bool rigid = true;
  std::string rigid_detail;
  for (int m = 0; m <= levels; ++m) {
    try {
      auto c = corner_rigidity(k, tower, base.corners[static_cast<std::size_t>(m)]);
      if (c != 1) {
        rigid = false;
        rigid_detail += "level " + std::to_string(m) + " count " + std::to_string(c) + "; ";
      }
    } catch (const std::exception& e) {
      rigid = false;
      rigid_detail += e.what();
    }
  }
  r.checks.push_back({"corner-rigidity", rigid, rigid_detail.empty() ? std::to_string(levels + 1) + " levels" : rigid_detail});

  // Pairs, including each string with itself.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j) pairs.emplace_back(i, j);
  std::vector<char> ok(pairs.size(), 0);
  for_each_index(pairs.size(), opts.exec, [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    try {
      const auto merged = triangle_merge(k, levels, all[i], all[j]);
      if (i == j) {
        const auto gi = girth(merged.graph, Exec::serial);
        ok[p] = !merged.triangle && (!gi || *gi > bound);
      } else {
        const auto& t = merged.triangle;
        ok[p] = t && merged.graph.adjacent((*t)[0], (*t)[1]) && merged.graph.adjacent((*t)[1], (*t)[2]) &&
                merged.graph.adjacent((*t)[0], (*t)[2]);
      }
    } catch (const std::exception&) {
      ok[p] = 0;
    }
  });
  std::size_t differing = 0, good = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    differing += pairs[p].first != pairs[p].second;
    good += ok[p] != 0;
  }
  r.checks.push_back({"triangle-merge", good == pairs.size(),
                      std::to_string(differing) + " differing pairs, " + std::to_string(good) + "/" +
                          std::to_string(pairs.size()) + " pairs as predicted"});
  finish(r);
  return r;
}

Check cross_embedding_check(int n, std::size_t length) {
  const auto all = BitString::all(length);
  std::vector<Graph> chains;
  for (const auto& b : all) chains.push_back(bridge_chain(n, b));
  std::string detail;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (i == j || chains[i].vertex_count() > chains[j].vertex_count()) continue;
      if (find_embedding(chains[i], chains[j])) detail += all[i].str() + " embeds into " + all[j].str() + "; ";
    }
  return {"cross-embedding", detail.empty(), detail};
}

std::string FamilyReport::to_json() const {
  using nlohmann::json;
  json j;
  j["type"] = type;
  if (type == "bridge") {
    j["n"] = n;
  } else {
    j["k"] = k;
    j["levels"] = levels;
  }
  j["length"] = length;
  j["members"] = json::array();
  for (const auto& m : members) {
    json e{{"bits", m.bits.str()}, {"forbidden_free", m.forbidden_free}, {"round_trip", m.round_trip}};
    if (!m.fingerprint.empty()) e["fingerprint"] = json::parse(m.fingerprint);
    if (!m.error.empty()) e["error"] = m.error;
    j["members"].push_back(std::move(e));
  }
  j["distinct"] = distinct;
  j["checks"] = json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["pass"] = pass;
  return j.dump(2) + "\n";
}

}  // namespace gw
