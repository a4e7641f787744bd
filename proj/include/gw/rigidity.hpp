#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gw/error.hpp"
#include "gw/graph.hpp"
#include "gw/parallel.hpp"
#include "gw/search.hpp"

namespace gw {

/// One hypothetical extra edge: between two existing non-adjacent vertices, or from an
/// existing vertex to a fresh one.
struct Augmentation {
  enum class Kind { internal_edge, pendant };
  Kind kind = Kind::pendant;
  VertexId u = 0;
  VertexId v = 0;  ///< unused for pendants

  friend bool operator==(const Augmentation&, const Augmentation&) = default;
};

struct AugmentationOutcome {
  Augmentation augmentation;
  bool touches_protected = false;
  std::optional<Embedding> witness;  ///< empty means SAFE

  bool safe() const { return !witness.has_value(); }
};

struct RigidityReport {
  std::string gadget;
  int n = 0;
  std::vector<VertexId> exempt;
  std::vector<AugmentationOutcome> outcomes;
  bool pass = false;

  std::size_t safe_count() const;
  /// Augmentations that raise a protected degree yet leave the graph bridge-free.
  std::vector<Augmentation> violations() const;
  std::string to_json() const;
};

/// Input to a sweep already contains the pattern.
class NotBridgeFree : public PreconditionError {
 public:
  explicit NotBridgeFree(Embedding witness)
      : PreconditionError("input graph already contains a bridge"), witness_(std::move(witness)) {}
  const Embedding& witness() const noexcept { return witness_; }

 private:
  Embedding witness_;
};

/// All non-edges (u < v, lexicographic), then one pendant per vertex.
std::vector<Augmentation> augmentations(const Graph& g);
Graph apply(const Graph& g, const Augmentation& a);

/// Runs find_bridge on every single augmentation. Passes iff every augmentation that touches a
/// non-exempt vertex yields a witness. Throws NotBridgeFree when g itself contains bridge(n).
RigidityReport augmentation_sweep(const Graph& g, int n, std::span<const VertexId> exempt,
                                  Exec exec = Exec::parallel, std::string gadget = {});

/// g plus a fresh pendant at v is still bridge(n)-free.
bool safe_pendant(const Graph& g, int n, VertexId v);

/// Embeddings of pentagon(k) into host with corner x_i sent to pins[i], counted up to `limit`.
/// No girth precondition.
std::size_t count_corner_embeddings(int k, const Graph& host, const std::array<VertexId, 5>& pins,
                                    std::size_t limit = 2);

/// count_corner_embeddings with limit 2 after checking girth(host) > 2k and distinct pins.
/// Throws PreconditionError otherwise.
std::size_t corner_rigidity(int k, const Graph& host, const std::array<VertexId, 5>& pins);

}  // namespace gw
