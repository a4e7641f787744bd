#include <doctest.h>

#include "gw/error.hpp"
#include "gw/search.hpp"
#include "gw/theorems.hpp"

using namespace gw;

TEST_CASE("bridge family reports") {
  for (auto [n, len] : {std::pair{1, 3}, {2, 3}, {3, 2}, {2, 0}}) {
    const auto r = bridge_theorem_report(n, static_cast<std::size_t>(len));
    CHECK(r.pass);
    CHECK(r.distinct == (std::size_t{1} << len));
    CHECK(r.members.size() == (std::size_t{1} << len));
  }
}

TEST_CASE("bridge report is deterministic across execution modes") {
  ReportOptions serial;
  serial.exec = Exec::serial;
  CHECK(bridge_theorem_report(1, 3, serial).to_json() == bridge_theorem_report(1, 3).to_json());
}

TEST_CASE("cross embedding") {
  const auto c = cross_embedding_check(1, 2);
  CHECK(c.pass);
  ReportOptions opts;
  opts.cross_embedding = true;
  CHECK(bridge_theorem_report(1, 2, opts).pass);
}

TEST_CASE("triangle merge") {
  const auto r = triangle_merge(2, 4, BitString::parse("1"), BitString::parse("0"));
  REQUIRE(r.triangle);
  CHECK(*r.position == 0);
  const auto& t = *r.triangle;
  CHECK(t[0] == r.layout.spread[0]);
  CHECK(t[2] == r.layout.spread[1]);
  CHECK(r.graph.adjacent(t[0], t[1]));
  CHECK(r.graph.adjacent(t[1], t[2]));
  CHECK(r.graph.adjacent(t[0], t[2]));
  CHECK(girth(r.graph) == 3u);

  const auto same = triangle_merge(2, 16, BitString::parse("01"), BitString::parse("01"));
  CHECK(!same.triangle);
  CHECK(*girth(same.graph) > 4u);

  const auto late = triangle_merge(3, 16, BitString::parse("10"), BitString::parse("11"));
  REQUIRE(late.triangle);
  CHECK(*late.position == 1);
  CHECK(short_cycle(late.graph, 3));

  CHECK_THROWS_AS(triangle_merge(2, 4, BitString::parse("1"), BitString::parse("10")), InvalidArgument);
}

TEST_CASE("property: merge yields a triangle iff the strings differ") {
  for (std::size_t len = 0; len <= 3; ++len)
    for (const auto& a : BitString::all(len))
      for (const auto& b : BitString::all(len)) {
        const auto r = triangle_merge(2, 16, a, b);
        CHECK(r.triangle.has_value() == (a != b));
        CHECK(short_cycle(r.graph, 3).has_value() == (a != b));
      }
}

TEST_CASE("girth family reports") {
  CHECK(girth_theorem_report(2, 4, 0).pass);
  CHECK(girth_theorem_report(2, 4, 1).pass);
  const auto r = girth_theorem_report(2, 16, 3);
  CHECK(r.pass);
  CHECK(r.distinct == 8);
  CHECK(girth_theorem_report(3, 16, 2).pass);
  CHECK_THROWS_AS(girth_theorem_report(2, 4, 2), CapacityError);
}

TEST_CASE("report json shape") {
  const auto j = bridge_theorem_report(1, 1).to_json();
  CHECK(j.find("\"distinct-fingerprints\"") != std::string::npos);
  CHECK(j.find("\"pass\": true") != std::string::npos);
}
