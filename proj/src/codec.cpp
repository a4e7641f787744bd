#include "gw/codec.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>

#include "gw/bridge_gadgets.hpp"
#include "gw/error.hpp"
#include "gw/search.hpp"

namespace gw {

namespace {

/// Highways indexed by (end vertex, next vertex inward), both orientations.
class HighwayIndex {
 public:
  explicit HighwayIndex(std::vector<Highway> hws) : hws_(std::move(hws)) {
    for (std::size_t i = 0; i < hws_.size(); ++i) {
      const auto& v = hws_[i].vertices;
      if (hws_[i].cyclic || v.size() < 2) continue;
      by_start_[{v[0], v[1]}] = {i, false};
      by_start_[{v[v.size() - 1], v[v.size() - 2]}] = {i, true};
    }
  }

  const std::vector<Highway>& all() const { return hws_; }

  /// The highway leaving `from` through `next`, oriented to start at `from`.
  std::optional<std::vector<VertexId>> leaving(VertexId from, VertexId next) const {
    auto it = by_start_.find({from, next});
    if (it == by_start_.end()) return std::nullopt;
    auto v = hws_[it->second.first].vertices;
    if (it->second.second) std::reverse(v.begin(), v.end());
    return v;
  }

 private:
  std::vector<Highway> hws_;
  std::map<std::pair<VertexId, VertexId>, std::pair<std::size_t, bool>> by_start_;
};

}  // namespace

BitString decode_bridge_bits(const Graph& host, int n) {
  if (n < 1) throw InvalidArgument("decode: n must be >= 1");
  const auto N = static_cast<std::size_t>(n);
  const auto hub_degree = N + 3, clique_degree = N + 2;
  HighwayIndex index(highways(host));

  // Step 1: the unique length-(n+2) highway with an end of degree n+3.
  std::vector<std::vector<VertexId>> special;
  for (const auto& h : index.all()) {
    if (h.cyclic || h.length() != N + 2) continue;
    auto v = h.vertices;
    if (host.degree(v.front()) != hub_degree) std::reverse(v.begin(), v.end());
    if (host.degree(v.front()) == hub_degree) special.push_back(std::move(v));
  }
  if (special.size() != 1)
    throw DecodeError("special-highway", "expected exactly one, found " + std::to_string(special.size()));

  BitString bits;
  VertexId entry = special[0].back();
  VertexId came_from = special[0][special[0].size() - 2];
  std::set<VertexId> visited_entries;
  while (true) {
    const std::string where = "drive-through " + std::to_string(bits.size());
    if (!visited_entries.insert(entry).second) throw DecodeError("clique", where + " revisited");
    if (host.degree(entry) != clique_degree)
      throw DecodeError("clique", where + ": entry has degree " + std::to_string(host.degree(entry)));

    // Step 2: the (n+2)-clique around the entry and its attached highways.
    std::vector<VertexId> clique{entry};
    for (auto w : host.neighbors(entry))
      if (w != came_from) clique.push_back(w);
    std::set<VertexId> members(clique.begin(), clique.end());
    if (clique.size() != clique_degree) throw DecodeError("clique", where + ": wrong clique size");
    std::size_t dead_ends = 0;
    std::optional<std::vector<VertexId>> outgoing;
    bool terminal = false;
    for (auto k : clique) {
      if (host.degree(k) != clique_degree) throw DecodeError("clique", where + ": member degree mismatch");
      std::vector<VertexId> outside;
      for (auto w : host.neighbors(k))
        if (!members.count(w)) outside.push_back(w);
      if (outside.size() != 1) throw DecodeError("clique", where + ": members must be pairwise adjacent");
      if (k == entry) continue;  // incoming highway
      auto hw = index.leaving(k, outside[0]);
      if (!hw) throw DecodeError("clique", where + ": attachment is not a highway");
      const auto far_degree = host.degree(hw->back());
      const auto length = hw->size() - 1;
      if (far_degree == hub_degree && length == N + 1) {
        ++dead_ends;
      } else if (far_degree == 1 && length == 1) {
        if (outgoing || terminal) throw DecodeError("connector", where + ": more than one exit");
        terminal = true;
      } else if (far_degree == clique_degree) {
        if (outgoing || terminal) throw DecodeError("connector", where + ": more than one exit");
        if (length != N + 1 && length != N + 2)
          throw DecodeError("connector", where + ": length " + std::to_string(length) + " outside {n+1, n+2}");
        outgoing = std::move(*hw);
      } else {
        throw DecodeError("clique", where + ": unclassifiable attached highway");
      }
    }
    if (dead_ends != N) throw DecodeError("clique", where + ": expected n dead ends");
    if (terminal) break;
    if (!outgoing) throw DecodeError("connector", where + ": no exit");
    bits.push_back(static_cast<int>(outgoing->size() - 1 - (N + 1)));
    entry = outgoing->back();
    came_from = (*outgoing)[outgoing->size() - 2];
  }

  // Step 3: nothing but the recognised chain.
  const auto expect = bridge_chain_size(n, bits);
  if (host.vertex_count() != expect.vertices || host.edge_count() != expect.edges)
    throw DecodeError("size", "graph has extra structure beyond chain " + bits.str());
  return bits;
}

Fingerprint fingerprint(const Graph& host, int n) {
  Fingerprint fp;
  fp.n = n;
  fp.bits = decode_bridge_bits(host, n);
  for (const auto& h : highways(host)) {
    auto [a, b] = h.end_degrees;
    if (h.cyclic || a == 1 || b == 1) continue;
    fp.census.emplace_back(h.length(), std::min(a, b), std::max(a, b));
  }
  std::sort(fp.census.begin(), fp.census.end());
  return fp;
}

std::string Fingerprint::to_json() const {
  using nlohmann::json;
  json census_json = json::array();
  for (auto [len, lo, hi] : census) census_json.push_back({len, lo, hi});
  return json{{"n", n}, {"bits", bits.str()}, {"census", census_json}}.dump() + "\n";
}

BitString decode_girth_bits(const Graph& chain, const TowerLayout& layout) {
  if (layout.spread.empty()) throw DecodeError("layout", "no spread vertices");
  BitString bits;
  for (std::size_t m = 0; m + 1 < layout.spread.size(); ++m) {
    const auto a = layout.spread[m], b = layout.spread[m + 1];
    const bool edge = chain.adjacent(a, b);
    bool helper = false;
    for (auto w : chain.neighbors(a))
      if (w >= layout.tower_size && chain.adjacent(w, b)) helper = true;
    if (edge == helper)
      throw DecodeError("position " + std::to_string(m), edge ? "both an edge and a helper" : "neither an edge nor a helper");
    bits.push_back(edge ? 1 : 0);
  }
  return bits;
}

}  // namespace gw
