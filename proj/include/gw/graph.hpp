#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gw {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Which named symbol of a construction a vertex instantiates.
enum class RoleKind : std::uint8_t {
  plain,
  clique_k,
  path_p,
  bridge_a,
  bridge_b,
  bridge_c,
  bridge_x,
  bridge_d,
  bridge_e,
  exit_left,
  exit_right,
  highway_h,
  corner_x,
  midpoint_y,
  spread_v,
  helper_u,
};

std::string_view to_string(RoleKind kind);
/// Throws InvalidArgument on an unknown name.
RoleKind role_kind_from_string(std::string_view name);

/// Role tag: a kind plus up to three small indices (instance m, position i, position j).
struct Role {
  RoleKind kind = RoleKind::plain;
  std::vector<int> ix;

  Role() = default;
  Role(RoleKind k, std::vector<int> indices = {});

  /// "kind" or "kind(i,j,...)".
  std::string str() const;

  friend bool operator==(const Role&, const Role&) = default;
};

/// Finite simple undirected graph in compressed adjacency form. Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return roles_.size(); }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  /// Sorted ascending.
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;
  const Role& role(VertexId v) const;
  std::span<const Role> roles() const noexcept { return roles_; }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t max_degree() const noexcept;
  std::vector<std::size_t> degree_sequence() const;

  bool contains(VertexId v) const noexcept { return v < roles_.size(); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  void check(VertexId v) const;

  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<Role> roles_;
};

/// Single-owner construction buffer for a Graph.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  /// Starts from a copy of an existing graph.
  explicit GraphBuilder(const Graph& g);

  VertexId add_vertex(Role role = {});
  /// Idempotent. Throws on self-loop or unknown id.
  void add_edge(VertexId u, VertexId v);

  /// Copies `piece` in, id order preserved. glue[p], when set, names an existing
  /// vertex that piece vertex p is merged into (the existing role wins).
  /// Returns piece id -> builder id.
  std::vector<VertexId> append(const Graph& piece, std::span<const std::pair<VertexId, VertexId>> glue = {});

  std::size_t vertex_count() const noexcept { return roles_.size(); }
  bool adjacent(VertexId u, VertexId v) const;
  void set_role(VertexId v, Role role);
  const Role& role(VertexId v) const;

  Graph finalize() &&;
  Graph build() const&;

 private:
  void check(VertexId v) const;

  std::vector<std::vector<VertexId>> adj_;
  std::vector<Role> roles_;
};

/// Merges `drop` into `keep`; ids above `drop` shift down by one. keep's role is retained.
/// Throws on keep == drop, unknown ids, or adjacent pair.
Graph identify(const Graph& g, VertexId keep, VertexId drop);

/// Same graph under a seeded pseudorandom vertex permutation, roles erased to plain.
/// perm_out, when given, receives old id -> new id.
Graph relabel(const Graph& g, std::uint64_t seed, std::vector<VertexId>* perm_out = nullptr);

/// Copy of g with one extra edge (u, v) or, when v is absent, a fresh pendant at u.
Graph with_edge(const Graph& g, VertexId u, VertexId v);
Graph with_pendant(const Graph& g, VertexId u);

}  // namespace gw
