#include "gw/bridge_gadgets.hpp"

#include <json.hpp>

#include "gw/error.hpp"

namespace gw {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

Graph prefixed(const Graph& g, int prefix) {
  GraphBuilder b(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto r = g.role(v);
    r.ix.insert(r.ix.begin(), prefix);
    b.set_role(v, Role(r.kind, std::move(r.ix)));
  }
  return std::move(b).finalize();
}

std::vector<VertexId> mapped(const std::vector<VertexId>& ids, const std::vector<VertexId>& map) {
  std::vector<VertexId> out;
  out.reserve(ids.size());
  for (auto v : ids) out.push_back(map[v]);
  return out;
}

DeadEndLayout mapped(const DeadEndLayout& d, const std::vector<VertexId>& map) {
  return {mapped(d.clique, map), mapped(d.path, map)};
}

DriveThroughLayout mapped(const DriveThroughLayout& t, const std::vector<VertexId>& map) {
  DriveThroughLayout out{mapped(t.clique, map), map[t.left], map[t.right], {}};
  for (const auto& d : t.dead_ends) out.dead_ends.push_back(mapped(d, map));
  return out;
}

}  // namespace

Graph complete_graph(int m) {
  require(m >= 1, "complete_graph: m must be >= 1");
  GraphBuilder b;
  for (int i = 1; i <= m; ++i) b.add_vertex({RoleKind::clique_k, {i}});
  for (VertexId u = 0; u < static_cast<VertexId>(m); ++u)
    for (VertexId v = u + 1; v < static_cast<VertexId>(m); ++v) b.add_edge(u, v);
  return std::move(b).finalize();
}

Graph path_graph(int m) {
  require(m >= 1, "path_graph: m must be >= 1");
  GraphBuilder b;
  for (int j = 0; j <= m; ++j) b.add_vertex({RoleKind::path_p, {j}});
  for (VertexId j = 0; j < static_cast<VertexId>(m); ++j) b.add_edge(j, j + 1);
  return std::move(b).finalize();
}

Graph cycle_graph(int m) {
  require(m >= 3, "cycle_graph: m must be >= 3");
  GraphBuilder b;
  for (int i = 0; i < m; ++i) b.add_vertex({RoleKind::plain, {i}});
  for (VertexId i = 0; i < static_cast<VertexId>(m); ++i) b.add_edge(i, (i + 1) % static_cast<VertexId>(m));
  return std::move(b).finalize();
}

Graph bridge(int n) {
  require(n >= 1, "bridge: n must be >= 1");
  GraphBuilder b;
  auto a = b.add_vertex({RoleKind::bridge_a});
  auto bb = b.add_vertex({RoleKind::bridge_b});
  auto c = b.add_vertex({RoleKind::bridge_c});
  std::vector<VertexId> x;
  for (int i = 1; i <= n; ++i) x.push_back(b.add_vertex({RoleKind::bridge_x, {i}}));
  auto d = b.add_vertex({RoleKind::bridge_d});
  auto e = b.add_vertex({RoleKind::bridge_e});
  b.add_edge(a, c);
  b.add_edge(bb, c);
  b.add_edge(c, x.front());
  for (std::size_t i = 0; i + 1 < x.size(); ++i) b.add_edge(x[i], x[i + 1]);
  b.add_edge(x.back(), d);
  b.add_edge(x.back(), e);
  return std::move(b).finalize();
}

Graph dead_end(int n, DeadEndLayout* layout) {
  require(n >= 1, "dead_end: n must be >= 1");
  GraphBuilder b;
  auto clique = b.append(complete_graph(n + 3));
  auto hub = clique.back();
  std::pair<VertexId, VertexId> glue{0, hub};
  auto path = b.append(path_graph(n + 1), {&glue, 1});
  b.set_role(hub, {RoleKind::path_p, {0}});
  if (layout) {
    clique.pop_back();
    *layout = {std::move(clique), std::move(path)};
  }
  return std::move(b).finalize();
}

Graph drive_through(int n, DriveThroughLayout* layout) {
  require(n >= 1, "drive_through: n must be >= 1");
  GraphBuilder b;
  DriveThroughLayout out;
  out.clique = b.append(complete_graph(n + 2));
  DeadEndLayout local;
  auto piece = dead_end(n, &local);
  for (int i = 2; i <= n + 1; ++i) {
    auto k_i = out.clique[static_cast<std::size_t>(i - 1)];
    std::pair<VertexId, VertexId> glue{local.tip(), k_i};
    auto map = b.append(prefixed(piece, i), {&glue, 1});
    out.dead_ends.push_back(mapped(local, map));
  }
  out.left = b.add_vertex({RoleKind::exit_left});
  out.right = b.add_vertex({RoleKind::exit_right});
  b.add_edge(out.left, out.clique.front());
  b.add_edge(out.right, out.clique.back());
  if (layout) *layout = std::move(out);
  return std::move(b).finalize();
}

Graph bridge_chain(int n, const BitString& bits, ChainLayout* layout) {
  require(n >= 1, "bridge_chain: n must be >= 1");
  ChainLayout out;
  out.n = n;
  out.bits = bits;
  GraphBuilder b;

  DeadEndLayout de_local;
  out.dead_end = mapped(de_local, b.append(dead_end(n, &de_local)));

  DriveThroughLayout dt_local;
  const auto dt = drive_through(n, &dt_local);
  for (std::size_t m = 0; m <= bits.size(); ++m) {
    std::vector<std::pair<VertexId, VertexId>> glue;
    VertexId attach_from = 0;  // vertex to join to the new left exit by an edge
    bool needs_edge = false;
    std::vector<VertexId> connector;
    if (m == 0) {
      glue.emplace_back(dt_local.left, out.dead_end.tip());
    } else {
      const auto prev_right = out.drive_throughs.back().right;
      const int length = n - 1 + bits[m - 1];
      connector.push_back(prev_right);
      if (length == 0) {
        glue.emplace_back(dt_local.left, prev_right);
      } else {
        attach_from = prev_right;
        for (int j = 1; j < length; ++j) {
          auto h = b.add_vertex({RoleKind::highway_h, {static_cast<int>(m - 1), j}});
          b.add_edge(attach_from, h);
          connector.push_back(h);
          attach_from = h;
        }
        needs_edge = true;
      }
    }
    auto map = b.append(prefixed(dt, static_cast<int>(m)), glue);
    auto t = mapped(dt_local, map);
    if (m == 0) b.set_role(t.left, {RoleKind::exit_left, {0}});
    if (needs_edge) b.add_edge(attach_from, t.left);
    if (m > 0) {
      if (connector.back() != t.left) connector.push_back(t.left);
      out.connectors.push_back(std::move(connector));
    }
    out.drive_throughs.push_back(std::move(t));
  }
  if (layout) *layout = std::move(out);
  return std::move(b).finalize();
}

std::vector<VertexId> ChainLayout::special_highway() const {
  auto hw = dead_end.path;
  hw.push_back(drive_throughs.front().clique.front());
  return hw;
}

std::string ChainLayout::to_json() const {
  using nlohmann::json;
  auto de_json = [](const DeadEndLayout& d) { return json{{"k", d.clique}, {"p", d.path}}; };
  json j;
  j["n"] = n;
  j["bits"] = bits.str();
  j["dead_end"] = de_json(dead_end);
  j["drive_throughs"] = json::array();
  for (const auto& t : drive_throughs) {
    json dt{{"k", t.clique}, {"l", t.left}, {"r", t.right}, {"dead_ends", json::array()}};
    for (const auto& d : t.dead_ends) dt["dead_ends"].push_back(de_json(d));
    j["drive_throughs"].push_back(std::move(dt));
  }
  j["connectors"] = connectors;
  j["special_highway"] = special_highway();
  j["frontier"] = frontier();
  return j.dump() + "\n";
}

GadgetSize dead_end_size(int n) {
  require(n >= 1, "n must be >= 1");
  auto N = static_cast<std::size_t>(n);
  return {2 * N + 4, (N + 3) * (N + 2) / 2 + N + 1};
}

GadgetSize drive_through_size(int n) {
  auto de = dead_end_size(n);
  auto N = static_cast<std::size_t>(n);
  // Each attached dead end shares its tip with the clique.
  return {(N + 2) + N * (de.vertices - 1) + 2, (N + 2) * (N + 1) / 2 + N * de.edges + 2};
}

GadgetSize bridge_chain_size(int n, const BitString& bits) {
  auto de = dead_end_size(n);
  auto dt = drive_through_size(n);
  const auto L = bits.size();
  // A connecting path of length len contributes len edges and len - 1 vertices
  // beyond its glued ends (len = 0 merges two exits: -1 vertex).
  long long vertices = static_cast<long long>(de.vertices + (L + 1) * dt.vertices) - 1;
  std::size_t edges = de.edges + (L + 1) * dt.edges;
  for (std::size_t m = 0; m < L; ++m) {
    const int len = n - 1 + bits[m];
    vertices += len - 1;
    edges += static_cast<std::size_t>(len);
  }
  return {static_cast<std::size_t>(vertices), edges};
}

}  // namespace gw
