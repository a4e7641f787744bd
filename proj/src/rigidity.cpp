#include "gw/rigidity.hpp"

#include <algorithm>
#include <json.hpp>

#include "gw/bridge_gadgets.hpp"
#include "gw/girth_gadgets.hpp"

namespace gw {

std::vector<Augmentation> augmentations(const Graph& g) {
  std::vector<Augmentation> out;
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.push_back({Augmentation::Kind::internal_edge, u, v});
  for (VertexId u = 0; u < n; ++u) out.push_back({Augmentation::Kind::pendant, u, 0});
  return out;
}

Graph apply(const Graph& g, const Augmentation& a) {
  if (a.kind == Augmentation::Kind::pendant) return with_pendant(g, a.u);
  if (g.adjacent(a.u, a.v)) throw InvalidArgument("augmentation edge already present");
  return with_edge(g, a.u, a.v);
}

RigidityReport augmentation_sweep(const Graph& g, int n, std::span<const VertexId> exempt, Exec exec,
                                  std::string gadget) {
  const auto pattern = bridge(n);
  if (auto w = find_embedding(pattern, g)) throw NotBridgeFree(std::move(*w));

  std::vector<char> is_exempt(g.vertex_count(), 0);
  for (auto v : exempt) {
    if (!g.contains(v)) throw InvalidArgument("exempt vertex out of range");
    is_exempt[v] = 1;
  }

  RigidityReport report;
  report.gadget = std::move(gadget);
  report.n = n;
  report.exempt.assign(exempt.begin(), exempt.end());
  std::sort(report.exempt.begin(), report.exempt.end());

  const auto augs = augmentations(g);
  report.outcomes.resize(augs.size());
  auto check = [&](std::size_t i) {
    const auto& a = augs[i];
    auto& out = report.outcomes[i];
    out.augmentation = a;
    out.touches_protected =
        !is_exempt[a.u] || (a.kind == Augmentation::Kind::internal_edge && !is_exempt[a.v]);
    out.witness = find_embedding(pattern, apply(g, a));
  };
  const auto count = static_cast<long long>(augs.size());
  if (exec == Exec::serial) {
    for (long long i = 0; i < count; ++i) check(static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < count; ++i) check(static_cast<std::size_t>(i));
  }
  report.pass = report.violations().empty();
  return report;
}

std::size_t RigidityReport::safe_count() const {
  return static_cast<std::size_t>(
      std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.safe(); }));
}

std::vector<Augmentation> RigidityReport::violations() const {
  std::vector<Augmentation> out;
  for (const auto& o : outcomes)
    if (o.touches_protected && o.safe()) out.push_back(o.augmentation);
  return out;
}

std::string RigidityReport::to_json() const {
  using nlohmann::json;
  json j;
  j["gadget"] = gadget;
  j["n"] = n;
  j["exempt"] = exempt;
  j["pass"] = pass;
  j["augmentations"] = outcomes.size();
  j["safe"] = safe_count();
  j["outcomes"] = json::array();
  for (const auto& o : outcomes) {
    json e;
    const bool pendant = o.augmentation.kind == Augmentation::Kind::pendant;
    e["kind"] = pendant ? "pendant" : "edge";
    e["u"] = o.augmentation.u;
    if (!pendant) e["v"] = o.augmentation.v;
    e["protected"] = o.touches_protected;
    e["outcome"] = o.safe() ? json("SAFE") : json(o.witness->image);
    j["outcomes"].push_back(std::move(e));
  }
  return j.dump() + "\n";
}

bool safe_pendant(const Graph& g, int n, VertexId v) {
  if (!g.contains(v)) throw InvalidArgument("safe_pendant: unknown vertex");
  return !find_bridge(with_pendant(g, v), n).has_value();
}

std::size_t count_corner_embeddings(int k, const Graph& host, const std::array<VertexId, 5>& pins,
                                    std::size_t limit) {
  TowerLayout layout;
  const auto pattern = pentagon(k, &layout);
  MatchOptions opts;
  for (int i = 0; i < 5; ++i) opts.pins.emplace_back(layout.corners[0][i], pins[i]);
  return enumerate_embeddings(pattern, host, opts, limit).size();
}

std::size_t corner_rigidity(int k, const Graph& host, const std::array<VertexId, 5>& pins) {
  if (k < 2) throw InvalidArgument("corner_rigidity: k must be >= 2");
  for (int i = 0; i < 5; ++i) {
    if (!host.contains(pins[i])) throw InvalidArgument("corner_rigidity: pin out of range");
    for (int j = 0; j < i; ++j)
      if (pins[i] == pins[j]) throw PreconditionError("corner_rigidity: pins must be distinct");
  }
  if (auto g = girth(host); g && *g <= static_cast<std::size_t>(2 * k))
    throw PreconditionError("corner_rigidity: host girth " + std::to_string(*g) + " <= 2k = " +
                            std::to_string(2 * k));
  return count_corner_embeddings(k, host, pins, 2);
}

}  // namespace gw
