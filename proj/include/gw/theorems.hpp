#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gw/bitstring.hpp"
#include "gw/codec.hpp"
#include "gw/girth_gadgets.hpp"
#include "gw/graph.hpp"
#include "gw/parallel.hpp"

namespace gw {

struct MemberResult {
  BitString bits;
  bool forbidden_free = false;  ///< bridge-free, or girth > 2k
  bool round_trip = false;      ///< decode(build(bits)) == bits, also after relabel for bridge chains
  std::string fingerprint;      ///< JSON; bridge family only
  std::string error;            ///< set when a step threw
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct FamilyReport {
  std::string type;  ///< "bridge" or "girth"
  int n = 0;         ///< bridge parameter (bridge family)
  int k = 0;         ///< girth parameter (girth family)
  int levels = 0;    ///< tower levels (girth family)
  std::size_t length = 0;
  std::vector<MemberResult> members;
  std::size_t distinct = 0;
  std::vector<Check> checks;
  bool pass = false;

  std::string to_json() const;
};

struct ReportOptions {
  Exec exec = Exec::parallel;
  /// Bridge family: also check that no member embeds into a different member.
  bool cross_embedding = false;
};

/// All 2^L chains: freeness, decode round trip, pairwise distinct fingerprints, and an
/// augmentation sweep on the all-zero member.
FamilyReport bridge_theorem_report(int n, std::size_t length, const ReportOptions& opts = {});

struct MergeResult {
  Graph graph;
  TowerLayout layout;
  /// (v_m, u(m), v_{m+1}) at the first position where the strings differ.
  std::optional<std::array<VertexId, 3>> triangle;
  std::optional<std::size_t> position;
};

/// Union of girth_chain(k, M, a) and girth_chain(k, M, b) over one shared tower and spread.
/// A helper u(m) is shared when both strings have bit 0 at m.
MergeResult triangle_merge(int k, int levels, const BitString& a, const BitString& b);

/// All 2^L chains over one tower: girth, decode round trip, corner rigidity at each level, and
/// triangle_merge on every pair. Throws CapacityError when the tower is too small.
FamilyReport girth_theorem_report(int k, int levels, std::size_t length, const ReportOptions& opts = {});

/// No bridge_chain(n, a) embeds into bridge_chain(n, b) for a != b of the given length.
Check cross_embedding_check(int n, std::size_t length);

}  // namespace gw
