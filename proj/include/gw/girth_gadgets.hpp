#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gw/bitstring.hpp"
#include "gw/graph.hpp"

namespace gw {

struct TowerLayout {
  int k = 0;
  int levels = 0;  ///< M
  /// corners[m][i] = x^m_i
  std::vector<std::array<VertexId, 5>> corners;
  /// sides[m][i][j-1] = y^m_{i,j}, j = 1..k-1
  std::vector<std::array<std::vector<VertexId>, 5>> sides;
  /// Vertices 0..tower_size-1 belong to the tower; helpers come after.
  std::size_t tower_size = 0;
  std::vector<VertexId> spread;
  /// helpers[m] = u(m) when bit m is 0.
  std::vector<std::optional<VertexId>> helpers;

  /// The side vertex a level-(m+1) corner is glued onto: floor((k+1)/2).
  int glue_position() const { return (k + 1) / 2; }
  std::string to_json() const;
};

/// S_k: corners x_0..x_4 joined cyclically by paths of length k. Ids: x_0..x_4 then y_{i,j}
/// side by side. k >= 2.
Graph pentagon(int k, TowerLayout* layout = nullptr);

/// U(M): S(0) plus M levels, x^{m+1}_i identified with y^m_{2i mod 5, floor((k+1)/2)}.
/// x^0_0 is vertex 0.
Graph pentagon_tower(int k, int levels, TowerLayout* layout = nullptr);

/// Greedy spread selection: v_0 = anchor; v_{m+1} is the first vertex in BFS order from v_m
/// (neighbors ascending) at distance >= 2k+1 from v_m and from every earlier v_j.
/// Throws CapacityError when fewer than `count` vertices can be placed.
std::vector<VertexId> spread_vertices(const Graph& g, VertexId anchor, int k, std::size_t count);

/// U_eps over pentagon_tower(k, levels): bit 1 joins v_m v_{m+1}; bit 0 adds a helper u(m)
/// adjacent to both.
Graph girth_chain(int k, int levels, const BitString& bits, TowerLayout* layout = nullptr);

std::size_t tower_vertex_count(int k, int levels);
std::size_t tower_edge_count(int k, int levels);

}  // namespace gw
