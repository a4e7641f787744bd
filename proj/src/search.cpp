#include "gw/search.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "gw/bridge_gadgets.hpp"
#include "gw/error.hpp"

namespace gw {

namespace {

constexpr VertexId kUnmapped = std::numeric_limits<VertexId>::max();

/// Backtracking subgraph matcher. One instance runs one search.
class Matcher {
 public:
  Matcher(const Graph& pattern, const Graph& host, const MatchOptions& opts)
      : p_(pattern), h_(host), induced_(opts.induced), map_(pattern.vertex_count(), kUnmapped),
        used_(host.vertex_count(), 0) {
    std::vector<char> pinned(p_.vertex_count(), 0);
    for (auto [pv, hv] : opts.pins) {
      if (!p_.contains(pv) || !h_.contains(hv)) throw InvalidArgument("inconsistent pins: unknown vertex");
      if (pinned[pv]) throw InvalidArgument("inconsistent pins: pattern vertex " + std::to_string(pv) + " pinned twice");
      if (used_[hv]) throw InvalidArgument("inconsistent pins: host vertex " + std::to_string(hv) + " used twice");
      pinned[pv] = 1;
      used_[hv] = 1;
      map_[pv] = hv;
    }
    for (auto [pv, hv] : opts.pins)
      for (auto [qv, gv] : opts.pins) {
        if (pv >= qv) continue;
        const bool pe = p_.adjacent(pv, qv), he = h_.adjacent(hv, gv);
        if (pe && !he) throw InvalidArgument("inconsistent pins: pattern edge maps to a host non-edge");
        if (induced_ && !pe && he) throw InvalidArgument("inconsistent pins: pattern non-edge maps to a host edge");
      }
    for (auto [pv, hv] : opts.pins)
      if (h_.degree(hv) < p_.degree(pv)) pins_feasible_ = false;

    // Greedy order: most already-ordered neighbours first, then degree, then id.
    std::vector<std::size_t> links(p_.vertex_count(), 0);
    std::vector<char> placed = pinned;
    for (auto [pv, hv] : opts.pins)
      for (auto w : p_.neighbors(pv)) ++links[w];
    for (std::size_t left = p_.vertex_count() - opts.pins.size(); left > 0; --left) {
      VertexId best = kUnmapped;
      for (VertexId v = 0; v < p_.vertex_count(); ++v) {
        if (placed[v]) continue;
        if (best == kUnmapped || links[v] > links[best] ||
            (links[v] == links[best] && p_.degree(v) > p_.degree(best)))
          best = v;
      }
      placed[best] = 1;
      order_.push_back(best);
      for (auto w : p_.neighbors(best)) ++links[w];
    }

    // For each search position: pattern neighbours/non-neighbours already fixed when it is reached.
    std::vector<char> fixed = pinned;
    for (auto u : order_) {
      std::vector<VertexId> nb, non;
      for (VertexId w = 0; w < p_.vertex_count(); ++w) {
        if (!fixed[w] || w == u) continue;
        (p_.adjacent(u, w) ? nb : non).push_back(w);
      }
      fixed_neighbors_.push_back(std::move(nb));
      fixed_non_neighbors_.push_back(std::move(non));
      fixed[u] = 1;
    }
  }

  /// visit(const Embedding&) returns false to stop.
  template <class Visit>
  void run(Visit&& visit) {
    if (!pins_feasible_) return;
    extend(0, visit);
  }

 private:
  template <class Visit>
  bool extend(std::size_t depth, Visit& visit) {
    if (depth == order_.size()) return visit(Embedding{map_});
    const VertexId u = order_[depth];
    const auto need = p_.degree(u);
    const auto& nb = fixed_neighbors_[depth];

    auto try_candidate = [&](VertexId c) -> bool {
      if (used_[c] || h_.degree(c) < need) return true;
      for (auto w : nb)
        if (!h_.adjacent(map_[w], c)) return true;
      if (induced_)
        for (auto w : fixed_non_neighbors_[depth])
          if (h_.adjacent(map_[w], c)) return true;
      map_[u] = c;
      used_[c] = 1;
      const bool go_on = extend(depth + 1, visit);
      used_[c] = 0;
      map_[u] = kUnmapped;
      return go_on;
    };

    if (!nb.empty()) {
      // Candidates must neighbour every fixed neighbour's image; scan the smallest list.
      VertexId anchor = map_[nb.front()];
      for (auto w : nb)
        if (h_.degree(map_[w]) < h_.degree(anchor)) anchor = map_[w];
      for (auto c : h_.neighbors(anchor))
        if (!try_candidate(c)) return false;
    } else {
      for (VertexId c = 0; c < h_.vertex_count(); ++c)
        if (!try_candidate(c)) return false;
    }
    return true;
  }

  const Graph& p_;
  const Graph& h_;
  bool induced_;
  bool pins_feasible_ = true;
  std::vector<VertexId> map_;
  std::vector<char> used_;
  std::vector<VertexId> order_;
  std::vector<std::vector<VertexId>> fixed_neighbors_;
  std::vector<std::vector<VertexId>> fixed_non_neighbors_;
};

}  // namespace

std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host, const MatchOptions& opts) {
  std::optional<Embedding> found;
  Matcher(pattern, host, opts).run([&](const Embedding& e) {
    found = e;
    return false;
  });
  return found;
}

std::vector<Embedding> enumerate_embeddings(const Graph& pattern, const Graph& host, const MatchOptions& opts,
                                            std::size_t limit) {
  if (limit == 0) throw InvalidArgument("enumerate_embeddings: limit must be >= 1");
  std::vector<Embedding> out;
  Matcher(pattern, host, opts).run([&](const Embedding& e) {
    out.push_back(e);
    return out.size() < limit;
  });
  return out;
}

std::optional<Embedding> find_bridge(const Graph& host, int n) {
  if (n < 1) throw InvalidArgument("find_bridge: n must be >= 1");
  return find_embedding(bridge(n), host);
}

bool is_valid_embedding(const Graph& pattern, const Graph& host, const Embedding& e, bool induced) {
  if (e.image.size() != pattern.vertex_count()) return false;
  std::vector<char> seen(host.vertex_count(), 0);
  for (auto v : e.image) {
    if (!host.contains(v) || seen[v]) return false;
    seen[v] = 1;
  }
  for (VertexId u = 0; u < pattern.vertex_count(); ++u)
    for (VertexId w = u + 1; w < pattern.vertex_count(); ++w) {
      const bool pe = pattern.adjacent(u, w), he = host.adjacent(e.image[u], e.image[w]);
      if (pe && !he) return false;
      if (induced && !pe && he) return false;
    }
  return true;
}

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
  std::vector<int> dist(g.vertex_count(), -1);
  if (!g.contains(source)) throw InvalidArgument("bfs: unknown source");
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::vector<VertexId> bfs_order(const Graph& g, VertexId source) {
  if (!g.contains(source)) throw InvalidArgument("bfs: unknown source");
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> order{source};
  seen[source] = 1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (auto w : g.neighbors(order[head]))
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
  return order;
}

namespace {

constexpr std::size_t kNoCycle = std::numeric_limits<std::size_t>::max();

/// Shortest closed walk through a non-tree edge of the BFS from `s`, cut off at `bound`.
std::size_t girth_from(const Graph& g, VertexId s, std::size_t bound, std::vector<int>& dist,
                       std::vector<VertexId>& parent, std::vector<VertexId>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  queue.push_back(s);
  dist[s] = 0;
  parent[s] = s;
  std::size_t best = bound;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = queue[head];
    if (2 * static_cast<std::size_t>(dist[u]) >= best) break;
    for (auto w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (w != parent[u]) {
        best = std::min(best, static_cast<std::size_t>(dist[u] + dist[w] + 1));
      }
    }
  }
  return best;
}

}  // namespace

std::optional<std::size_t> girth(const Graph& g, Exec exec) {
  const auto n = static_cast<long long>(g.vertex_count());
  std::size_t best = kNoCycle;
  if (exec == Exec::serial) {
    std::vector<int> dist(g.vertex_count());
    std::vector<VertexId> parent(g.vertex_count()), queue;
    for (long long s = 0; s < n; ++s)
      best = std::min(best, girth_from(g, static_cast<VertexId>(s), best, dist, parent, queue));
  } else {
#pragma omp parallel reduction(min : best)
    {
      std::vector<int> dist(g.vertex_count());
      std::vector<VertexId> parent(g.vertex_count()), queue;
#pragma omp for schedule(dynamic, 16)
      for (long long s = 0; s < n; ++s)
        best = std::min(best, girth_from(g, static_cast<VertexId>(s), best, dist, parent, queue));
    }
  }
  if (best == kNoCycle) return std::nullopt;
  return best;
}

std::optional<std::vector<VertexId>> short_cycle(const Graph& g, std::size_t max_length) {
  if (max_length < 3) throw InvalidArgument("short_cycle: length bound must be >= 3");
  std::vector<int> dist(g.vertex_count());
  std::vector<VertexId> parent(g.vertex_count());
  std::optional<std::vector<VertexId>> best;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<VertexId> queue{s};
    dist[s] = 0;
    parent[s] = s;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      for (auto w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
          continue;
        }
        if (w == parent[u] || u > w) continue;  // each non-tree edge once
        const auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
        if (len > max_length || (best && len >= best->size())) continue;
        std::vector<VertexId> left, right;
        for (auto x = u; x != s; x = parent[x]) left.push_back(x);
        for (auto x = w; x != s; x = parent[x]) right.push_back(x);
        std::vector<char> mark(g.vertex_count(), 0);
        bool simple = true;
        for (auto x : left) mark[x] = 1;
        for (auto x : right)
          if (mark[x]) simple = false;
        if (!simple) continue;
        std::vector<VertexId> cycle{s};
        cycle.insert(cycle.end(), left.rbegin(), left.rend());
        cycle.insert(cycle.end(), right.begin(), right.end());
        best = std::move(cycle);
      }
    }
  }
  return best;
}

std::vector<Highway> highways(const Graph& g) {
  const auto n = g.vertex_count();
  auto low = [&](VertexId v) {
    auto d = g.degree(v);
    return d == 1 || d == 2;
  };
  std::vector<char> seen(n, 0);
  std::vector<Highway> out;
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start] || !low(start)) continue;
    std::vector<VertexId> comp{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (auto w : g.neighbors(comp[head]))
        if (!seen[w] && low(w)) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::vector<char> in(n, 0);
    for (auto v : comp) in[v] = 1;
    auto inner_degree = [&](VertexId v) {
      std::size_t c = 0;
      for (auto w : g.neighbors(v)) c += in[w];
      return c;
    };

    Highway hw;
    // Walk from an end of the induced path (or from the smallest vertex of a cycle).
    VertexId first = *std::min_element(comp.begin(), comp.end());
    bool closed = true;
    for (auto v : comp)
      if (inner_degree(v) < 2) {
        closed = false;
        first = v;
        break;
      }
    std::vector<VertexId> walk{first};
    VertexId prev = kUnmapped, cur = first;
    while (walk.size() < comp.size()) {
      VertexId next = kUnmapped;
      for (auto w : g.neighbors(cur))
        if (in[w] && w != prev) {
          next = w;
          break;
        }
      prev = cur;
      cur = next;
      walk.push_back(cur);
    }
    if (closed) {
      hw.vertices = std::move(walk);
      hw.cyclic = true;
    } else {
      // Attach the high-degree vertices at either end.
      auto outside = [&](VertexId v) {
        std::vector<VertexId> o;
        for (auto w : g.neighbors(v))
          if (!in[w]) o.push_back(w);
        return o;
      };
      auto head_out = outside(walk.front());
      if (walk.size() == 1) {
        if (!head_out.empty()) walk.insert(walk.begin(), head_out.front());
        if (head_out.size() > 1) walk.push_back(head_out[1]);
      } else {
        auto tail_out = outside(walk.back());
        if (!head_out.empty()) walk.insert(walk.begin(), head_out.front());
        if (!tail_out.empty()) walk.push_back(tail_out.front());
      }
      if (walk.back() < walk.front() || (walk.back() == walk.front() && walk[walk.size() - 2] < walk[1]))
        std::reverse(walk.begin(), walk.end());
      hw.vertices = std::move(walk);
    }
    hw.end_degrees = {g.degree(hw.front()), g.degree(hw.back())};
    out.push_back(std::move(hw));
  }
  std::sort(out.begin(), out.end(), [](const Highway& a, const Highway& b) {
    auto key = [](const Highway& h) { return std::make_pair(h.vertices[0], h.vertices.size() > 1 ? h.vertices[1] : h.vertices[0]); };
    return key(a) < key(b);
  });
  return out;
}

}  // namespace gw
