#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "gw/graph.hpp"
#include "gw/parallel.hpp"

namespace gw {

/// image[p] = host vertex of pattern vertex p.
struct Embedding {
  std::vector<VertexId> image;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Partial pattern -> host assignment that every returned embedding must extend.
using Pins = std::vector<std::pair<VertexId, VertexId>>;

struct MatchOptions {
  bool induced = false;
  Pins pins;
};

/// First embedding in deterministic order: pattern vertices by descending degree then id,
/// host candidates ascending. Throws InvalidArgument on inconsistent pins.
std::optional<Embedding> find_embedding(const Graph& pattern, const Graph& host, const MatchOptions& opts = {});

/// All embeddings in the same order, stopping after `limit`.
std::vector<Embedding> enumerate_embeddings(const Graph& pattern, const Graph& host, const MatchOptions& opts,
                                            std::size_t limit);

/// Non-induced search for bridge(n).
std::optional<Embedding> find_bridge(const Graph& host, int n);

/// Checks injectivity, edge preservation and, when induced, non-edge preservation.
bool is_valid_embedding(const Graph& pattern, const Graph& host, const Embedding& e, bool induced = false);

/// -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, VertexId source);
/// Reachable vertices in BFS order, neighbors visited ascending.
std::vector<VertexId> bfs_order(const Graph& g, VertexId source);

/// Length of the shortest cycle, or nullopt for a forest.
std::optional<std::size_t> girth(const Graph& g, Exec exec = Exec::parallel);

/// A shortest cycle (vertex sequence, closing edge implied) if its length is <= max_length.
std::optional<std::vector<VertexId>> short_cycle(const Graph& g, std::size_t max_length);

/// Maximal path whose interior vertices have degree 2.
struct Highway {
  std::vector<VertexId> vertices;  ///< h_0..h_t; for a cyclic highway the closing edge is implied
  bool cyclic = false;
  std::pair<std::size_t, std::size_t> end_degrees{0, 0};

  std::size_t length() const { return cyclic ? vertices.size() : vertices.size() - 1; }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
};

/// The degree-<=2 chains of g with their attachments. Isolated vertices are skipped.
/// Each highway starts at its smaller end id; the list is sorted by (h_0, h_1).
std::vector<Highway> highways(const Graph& g);

}  // namespace gw
