#include "gw/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "gw/error.hpp"

namespace gw {

namespace {

constexpr std::array<std::pair<RoleKind, std::string_view>, 16> kRoleNames{{
    {RoleKind::plain, "plain"},
    {RoleKind::clique_k, "clique-k"},
    {RoleKind::path_p, "path-p"},
    {RoleKind::bridge_a, "bridge-a"},
    {RoleKind::bridge_b, "bridge-b"},
    {RoleKind::bridge_c, "bridge-c"},
    {RoleKind::bridge_x, "bridge-x"},
    {RoleKind::bridge_d, "bridge-d"},
    {RoleKind::bridge_e, "bridge-e"},
    {RoleKind::exit_left, "exit-left"},
    {RoleKind::exit_right, "exit-right"},
    {RoleKind::highway_h, "highway-h"},
    {RoleKind::corner_x, "corner-x"},
    {RoleKind::midpoint_y, "midpoint-y"},
    {RoleKind::spread_v, "spread-v"},
    {RoleKind::helper_u, "helper-u"},
}};

}  // namespace

std::string_view to_string(RoleKind kind) {
  for (auto [k, name] : kRoleNames)
    if (k == kind) return name;
  return "plain";
}

RoleKind role_kind_from_string(std::string_view name) {
  for (auto [k, n] : kRoleNames)
    if (n == name) return k;
  throw InvalidArgument("unknown role kind '" + std::string(name) + "'");
}

Role::Role(RoleKind k, std::vector<int> indices) : kind(k), ix(std::move(indices)) {
  if (ix.size() > 3) throw InvalidArgument("a role carries at most three indices");
}

std::string Role::str() const {
  std::string out(to_string(kind));
  if (ix.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < ix.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ix[i]);
  }
  out += ')';
  return out;
}

// ---------------------------------------------------------------- Graph

void Graph::check(VertexId v) const {
  if (v >= roles_.size())
    throw InvalidArgument("unknown vertex id " + std::to_string(v));
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check(v);
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(VertexId v) const {
  check(v);
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  auto nu = neighbors(u);
  check(v);
  return std::binary_search(nu.begin(), nu.end(), v);
}

const Role& Graph::role(VertexId v) const {
  check(v);
  return roles_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v) best = std::max(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

std::vector<std::size_t> Graph::degree_sequence() const {
  std::vector<std::size_t> out(vertex_count());
  for (VertexId v = 0; v < vertex_count(); ++v) out[v] = degree(v);
  return out;
}

// --------------------------------------------------------- GraphBuilder

GraphBuilder::GraphBuilder(const Graph& g) : adj_(g.vertex_count()), roles_(g.roles_) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    adj_[v].assign(nb.begin(), nb.end());
  }
}

void GraphBuilder::check(VertexId v) const {
  if (v >= roles_.size())
    throw InvalidArgument("unknown vertex id " + std::to_string(v));
}

VertexId GraphBuilder::add_vertex(Role role) {
  roles_.push_back(std::move(role));
  adj_.emplace_back();
  return static_cast<VertexId>(roles_.size() - 1);
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
  check(u);
  check(v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  auto& nu = adj_[u];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  auto& nv = adj_[v];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
}

bool GraphBuilder::adjacent(VertexId u, VertexId v) const {
  check(u);
  check(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void GraphBuilder::set_role(VertexId v, Role role) {
  check(v);
  roles_[v] = std::move(role);
}

const Role& GraphBuilder::role(VertexId v) const {
  check(v);
  return roles_[v];
}

std::vector<VertexId> GraphBuilder::append(const Graph& piece,
                                           std::span<const std::pair<VertexId, VertexId>> glue) {
  constexpr VertexId kFresh = ~VertexId{0};
  std::vector<VertexId> map(piece.vertex_count(), kFresh);
  for (auto [p, existing] : glue) {
    piece.check(p);
    check(existing);
    if (map[p] != kFresh) throw InvalidArgument("piece vertex glued twice");
    map[p] = existing;
  }
  for (VertexId p = 0; p < piece.vertex_count(); ++p)
    if (map[p] == kFresh) map[p] = add_vertex(piece.role(p));
  for (auto [u, v] : piece.edges()) add_edge(map[u], map[v]);
  return map;
}

Graph GraphBuilder::build() const& {
  GraphBuilder copy(*this);
  return std::move(copy).finalize();
}

Graph GraphBuilder::finalize() && {
  Graph g;
  g.roles_ = std::move(roles_);
  g.offsets_.assign(adj_.size() + 1, 0);
  for (std::size_t v = 0; v < adj_.size(); ++v) g.offsets_[v + 1] = g.offsets_[v] + adj_[v].size();
  g.targets_.reserve(g.offsets_.back());
  for (auto& nb : adj_) g.targets_.insert(g.targets_.end(), nb.begin(), nb.end());
  adj_.clear();
  roles_.clear();
  return g;
}

// ------------------------------------------------------------ operations

Graph identify(const Graph& g, VertexId keep, VertexId drop) {
  if (!g.contains(keep) || !g.contains(drop)) throw InvalidArgument("identify: unknown vertex id");
  if (keep == drop) throw InvalidArgument("identify: keep and drop are the same vertex");
  if (g.adjacent(keep, drop)) throw InvalidArgument("identify: vertices are adjacent (would create a loop)");

  auto remap = [&](VertexId v) -> VertexId {
    if (v == drop) v = keep;
    return v > drop ? v - 1 : v;
  };
  GraphBuilder b;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (v != drop) b.add_vertex(g.role(v));
  for (auto [u, v] : g.edges()) b.add_edge(remap(u), remap(v));
  return std::move(b).finalize();
}

Graph relabel(const Graph& g, std::uint64_t seed, std::vector<VertexId>* perm_out) {
  // Explicit Fisher-Yates so the permutation is identical across standard libraries.
  std::mt19937_64 rng(seed);
  std::vector<VertexId> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), VertexId{0});
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);

  GraphBuilder b;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) b.add_vertex();
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  if (perm_out) *perm_out = std::move(perm);
  return std::move(b).finalize();
}

Graph with_edge(const Graph& g, VertexId u, VertexId v) {
  GraphBuilder b(g);
  b.add_edge(u, v);
  return std::move(b).finalize();
}

Graph with_pendant(const Graph& g, VertexId u) {
  GraphBuilder b(g);
  b.add_edge(u, b.add_vertex());
  return std::move(b).finalize();
}

}  // namespace gw
