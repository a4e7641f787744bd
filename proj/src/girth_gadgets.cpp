#include "gw/girth_gadgets.hpp"

#include <json.hpp>

#include "gw/error.hpp"
#include "gw/search.hpp"

namespace gw {

namespace {

void check_k(int k) {
  if (k < 2) throw InvalidArgument("pentagon parameter k must be >= 2");
}

/// Adds one S_k copy at level m. Corners already present are passed in `fixed`.
void add_pentagon(GraphBuilder& b, int k, int m, const std::array<std::optional<VertexId>, 5>& fixed,
                  std::array<VertexId, 5>& corners, std::array<std::vector<VertexId>, 5>& sides) {
  for (int i = 0; i < 5; ++i)
    corners[i] = fixed[i] ? *fixed[i] : b.add_vertex({RoleKind::corner_x, {m, i}});
  for (int i = 0; i < 5; ++i) {
    sides[i].clear();
    VertexId prev = corners[i];
    for (int j = 1; j < k; ++j) {
      auto y = b.add_vertex({RoleKind::midpoint_y, {m, i, j}});
      b.add_edge(prev, y);
      sides[i].push_back(y);
      prev = y;
    }
    b.add_edge(prev, corners[(i + 1) % 5]);
  }
}

}  // namespace

Graph pentagon(int k, TowerLayout* layout) { return pentagon_tower(k, 0, layout); }

Graph pentagon_tower(int k, int levels, TowerLayout* layout) {
  check_k(k);
  if (levels < 0) throw InvalidArgument("tower level count must be >= 0");
  TowerLayout out;
  out.k = k;
  out.levels = levels;
  GraphBuilder b;
  const int mid = out.glue_position();
  for (int m = 0; m <= levels; ++m) {
    std::array<std::optional<VertexId>, 5> fixed{};
    if (m > 0) {
      const auto& below = out.sides.back();
      for (int i = 0; i < 5; ++i) fixed[i] = below[(2 * i) % 5][mid - 1];
    }
    std::array<VertexId, 5> corners{};
    std::array<std::vector<VertexId>, 5> sides;
    add_pentagon(b, k, m, fixed, corners, sides);
    out.corners.push_back(corners);
    out.sides.push_back(std::move(sides));
  }
  out.tower_size = b.vertex_count();
  if (layout) *layout = std::move(out);
  return std::move(b).finalize();
}

std::vector<VertexId> spread_vertices(const Graph& g, VertexId anchor, int k, std::size_t count) {
  check_k(k);
  if (!g.contains(anchor)) throw InvalidArgument("spread anchor is not a vertex");
  if (count == 0) return {};
  const int need = 2 * k + 1;
  std::vector<VertexId> chosen{anchor};
  std::vector<std::vector<int>> dist{bfs_distances(g, anchor)};
  while (chosen.size() < count) {
    std::optional<VertexId> next;
    for (auto v : bfs_order(g, chosen.back())) {
      bool far = true;
      for (const auto& d : dist)
        if (d[v] < need) {  // unreachable (-1) counts as too close: the chain must stay connected
          far = false;
          break;
        }
      if (far) {
        next = v;
        break;
      }
    }
    if (!next) throw CapacityError(count, chosen.size());
    chosen.push_back(*next);
    dist.push_back(bfs_distances(g, *next));
  }
  return chosen;
}

Graph girth_chain(int k, int levels, const BitString& bits, TowerLayout* layout) {
  TowerLayout out;
  const auto tower = pentagon_tower(k, levels, &out);
  out.spread = spread_vertices(tower, out.corners[0][0], k, bits.size() + 1);
  GraphBuilder b(tower);
  for (std::size_t m = 0; m < out.spread.size(); ++m)
    b.set_role(out.spread[m], {RoleKind::spread_v, {static_cast<int>(m)}});
  out.helpers.assign(bits.size(), std::nullopt);
  for (std::size_t m = 0; m < bits.size(); ++m) {
    if (bits[m] == 1) {
      b.add_edge(out.spread[m], out.spread[m + 1]);
    } else {
      auto u = b.add_vertex({RoleKind::helper_u, {static_cast<int>(m)}});
      b.add_edge(u, out.spread[m]);
      b.add_edge(u, out.spread[m + 1]);
      out.helpers[m] = u;
    }
  }
  if (layout) *layout = std::move(out);
  return std::move(b).finalize();
}

std::size_t tower_vertex_count(int k, int levels) {
  auto K = static_cast<std::size_t>(k);
  return 5 * K + static_cast<std::size_t>(levels) * (5 * K - 5);
}

std::size_t tower_edge_count(int k, int levels) {
  return 5 * static_cast<std::size_t>(k) * (static_cast<std::size_t>(levels) + 1);
}

std::string TowerLayout::to_json() const {
  using nlohmann::json;
  json j;
  j["k"] = k;
  j["levels"] = levels;
  j["tower_size"] = tower_size;
  j["corners"] = corners;
  j["sides"] = json::array();
  for (const auto& level : sides) j["sides"].push_back(json(level));
  j["spread"] = spread;
  j["helpers"] = json::array();
  for (const auto& h : helpers) j["helpers"].push_back(h ? json(*h) : json(nullptr));
  return j.dump() + "\n";
}

}  // namespace gw
