#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "gw/bitstring.hpp"
#include "gw/girth_gadgets.hpp"
#include "gw/graph.hpp"

namespace gw {

/// (length, smaller end degree, larger end degree)
using HighwayClass = std::tuple<std::size_t, std::size_t, std::size_t>;

/// Structure-only invariant of a bridge chain.
struct Fingerprint {
  int n = 0;
  BitString bits;
  /// Sorted multiset over highways without a degree-1 end.
  std::vector<HighwayClass> census;

  std::string to_json() const;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Recovers bits from any graph isomorphic to bridge_chain(n, bits); roles are ignored.
/// Throws DecodeError naming the failed step ("special-highway", "clique", "connector", "size").
BitString decode_bridge_bits(const Graph& host, int n);

Fingerprint fingerprint(const Graph& host, int n);

/// Reads bit m from the spread pair (v_m, v_{m+1}): adjacent -> 1, common neighbour outside the
/// tower -> 0. Throws DecodeError when neither or both hold.
BitString decode_girth_bits(const Graph& chain, const TowerLayout& layout);

}  // namespace gw
