#include <doctest.h>

#include <set>

#include "gw/bridge_gadgets.hpp"
#include "gw/codec.hpp"
#include "gw/error.hpp"
#include "gw/girth_gadgets.hpp"
#include "gw/search.hpp"

using namespace gw;

TEST_CASE("bitstrings") {
  CHECK(BitString::parse("0101").str() == "0101");
  CHECK(BitString::parse("").empty());
  CHECK_THROWS_AS(BitString::parse("012"), InvalidArgument);
  CHECK(BitString::from_index(5, 4).str() == "0101");
  const auto all = BitString::all(3);
  REQUIRE(all.size() == 8);
  CHECK(all.front().str() == "000");
  CHECK(all.back().str() == "111");
  CHECK(BitString::all(0).size() == 1);
}

TEST_CASE("decode round trip") {
  CHECK(decode_bridge_bits(bridge_chain(2, BitString::parse("101")), 2).str() == "101");
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    CHECK(decode_bridge_bits(relabel(bridge_chain(1, BitString::parse("0110")), seed), 1).str() == "0110");
  for (int n = 1; n <= 3; ++n)
    for (std::size_t len = 0; len <= 3; ++len)
      for (const auto& b : BitString::all(len)) CHECK(decode_bridge_bits(bridge_chain(n, b), n) == b);
}

TEST_CASE("decode diagnoses non-chains") {
  auto step = [](const Graph& g, int n) {
    try {
      decode_bridge_bits(g, n);
    } catch (const DecodeError& e) {
      return e.step();
    }
    return std::string("none");
  };
  CHECK(step(complete_graph(5), 2) == "special-highway");
  CHECK(step(path_graph(9), 2) == "special-highway");
  // Wrong n: the special highway has the wrong length.
  CHECK(step(bridge_chain(2, BitString::parse("1")), 1) == "special-highway");
  // Two chains side by side give two special highways.
  GraphBuilder b;
  b.append(bridge_chain(1, BitString::parse("0")));
  b.append(bridge_chain(1, BitString::parse("1")));
  CHECK(step(std::move(b).finalize(), 1) == "special-highway");
  // Extra structure beyond the chain.
  ChainLayout l;
  const auto g = bridge_chain(2, BitString::parse("1"), &l);
  GraphBuilder extra(g);
  extra.add_vertex();
  CHECK(step(std::move(extra).finalize(), 2) == "size");
  // A connector subdivided once more is out of range.
  ChainLayout l2;
  const auto c = bridge_chain(2, BitString::parse("1"), &l2);
  const auto x = l2.connectors[0][0], y = l2.connectors[0][1];
  GraphBuilder longer;
  for (VertexId v = 0; v <= c.vertex_count(); ++v) longer.add_vertex();
  for (auto [u, v] : c.edges())
    if (!((u == x && v == y) || (u == y && v == x))) longer.add_edge(u, v);
  const auto w = static_cast<VertexId>(c.vertex_count());
  longer.add_edge(x, w);
  longer.add_edge(w, y);
  CHECK(step(std::move(longer).finalize(), 2) == "connector");
}

TEST_CASE("decode fails on a broken clique") {
  ChainLayout l;
  const auto g = bridge_chain(1, BitString::parse("1"), &l);
  const auto& conn = l.connectors[0];
  REQUIRE(conn.size() >= 2);
  const auto h = with_edge(g, conn.front(), l.dead_end.clique.front());
  CHECK_THROWS_AS(decode_bridge_bits(h, 1), DecodeError);
}

TEST_CASE("fingerprints") {
  const auto a = fingerprint(bridge_chain(2, BitString::parse("10")), 2);
  const auto b = fingerprint(relabel(bridge_chain(2, BitString::parse("10")), 9), 2);
  CHECK(a == b);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.bits.str() == "10");
  // every highway but the terminal pendant
  CHECK(a.census.size() == 9);
  std::set<std::string> seen;
  for (const auto& bits : BitString::all(3)) seen.insert(fingerprint(bridge_chain(1, bits), 1).to_json());
  CHECK(seen.size() == 8);
}

TEST_CASE("girth decode") {
  for (const auto& bits : BitString::all(3)) {
    TowerLayout l;
    const auto g = girth_chain(2, 16, bits, &l);
    CHECK(decode_girth_bits(g, l) == bits);
  }
  TowerLayout l;
  const auto g = girth_chain(2, 16, BitString::parse("1"), &l);
  auto broken = l;
  broken.spread.clear();
  CHECK_THROWS_AS(decode_girth_bits(g, broken), DecodeError);
  const auto both = with_pendant(g, l.spread[0]);
  GraphBuilder b(both);
  b.add_edge(static_cast<VertexId>(both.vertex_count() - 1), l.spread[1]);
  CHECK_THROWS_AS(decode_girth_bits(std::move(b).finalize(), l), DecodeError);
}
