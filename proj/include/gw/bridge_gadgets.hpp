#pragma once

#include <string>
#include <vector>

#include "gw/bitstring.hpp"
#include "gw/graph.hpp"

namespace gw {

/// K_m on k_1..k_m (ids 0..m-1), roles clique-k(i). m >= 1.
Graph complete_graph(int m);
/// P_m on p_0..p_m, roles path-p(j). m >= 1.
Graph path_graph(int m);
/// C_m, roles plain(i). m >= 3.
Graph cycle_graph(int m);

/// The n-bridge B_n: a,b on c; c-x_1-...-x_n; d,e on x_n. Vertex order a,b,c,x_1..x_n,d,e.
Graph bridge(int n);

/// Vertex ids of a dead end inside a larger graph.
struct DeadEndLayout {
  std::vector<VertexId> clique;  ///< k_1..k_{n+2}; the hub k_{n+3} is path[0]
  std::vector<VertexId> path;    ///< p_0 (hub) .. p_{n+1} (tip)
  VertexId hub() const { return path.front(); }
  VertexId tip() const { return path.back(); }
};

struct DriveThroughLayout {
  std::vector<VertexId> clique;  ///< k_1..k_{n+2}
  VertexId left = 0;
  VertexId right = 0;
  /// dead_ends[i] hangs off clique[i + 1] (interior clique vertices only).
  std::vector<DeadEndLayout> dead_ends;
};

/// K_{n+3} with P_{n+1} glued at k_{n+3} = p_0. Clique vertices come first, then p_1..p_{n+1}.
Graph dead_end(int n, DeadEndLayout* layout = nullptr);
Graph drive_through(int n, DriveThroughLayout* layout = nullptr);

struct ChainLayout {
  int n = 0;
  BitString bits;
  DeadEndLayout dead_end;  ///< D^eps; its tip is left exit of drive_throughs[0]
  std::vector<DriveThroughLayout> drive_throughs;
  /// connectors[m] = h_0 = r(m), ..., h_last = l(m+1). For n = 1 with bit 0 this is the single
  /// identified vertex.
  std::vector<std::vector<VertexId>> connectors;

  /// r(L): the pendant truncation frontier.
  VertexId frontier() const { return drive_throughs.back().right; }
  /// Vertices of the unique special highway p_0 .. p_{n+1} = l(0), k_1 of the first drive-through.
  std::vector<VertexId> special_highway() const;
  std::string to_json() const;
};

/// Dead end, drive-throughs T(0..L), connecting paths of length n-1+bits[m]. n >= 1.
Graph bridge_chain(int n, const BitString& bits, ChainLayout* layout = nullptr);

/// Closed-form sizes used for validation.
struct GadgetSize {
  std::size_t vertices;
  std::size_t edges;
};
GadgetSize dead_end_size(int n);
GadgetSize drive_through_size(int n);
GadgetSize bridge_chain_size(int n, const BitString& bits);

}  // namespace gw
