#include <doctest.h>

#include <algorithm>

#include "testutil.hpp"
#include "twinless/errors.hpp"
#include "twinless/fixtures.hpp"
#include "twinless/generate.hpp"
#include "twinless/oracle.hpp"
#include "twinless/vtcc.hpp"

using namespace twinless;
using namespace twinless::testutil;

namespace {

std::vector<std::vector<int>> sets1(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const VertexSet& s : sets) out.push_back(verts1(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("is_two_vertex_twinless_connected") {
  CHECK(is_two_vertex_twinless_connected(fixture_graph("fig2")));
  CHECK_FALSE(is_two_vertex_twinless_connected(fixture_graph("fig5")));
  CHECK_FALSE(is_two_vertex_twinless_connected(c3()));
  CHECK_FALSE(is_two_vertex_twinless_connected(two_cycle()));
}

TEST_CASE("collect_and_dedup") {
  VertexSet a(std::vector<int>{0, 1, 2});
  VertexSet b(std::vector<int>{0, 1, 2, 3});
  CHECK(collect_and_dedup({a, a}).components.size() == 1);
  Vtcc2Report r = collect_and_dedup({a, b});
  REQUIRE(r.components.size() == 1);
  CHECK(r.components[0] == b);
}

TEST_CASE("2vtcc on the figures") {
  SUBCASE("fig1: two components sharing vertex 4") {
    Vtcc2Report r = two_vertex_twinless_components(fixture_graph("fig1"));
    CHECK(sets1(r.components) ==
          std::vector<std::vector<int>>{{1, 2, 3, 4, 5}, {4, 6, 9, 10}});
  }
  SUBCASE("fig5: one component") {
    Vtcc2Report r = two_vertex_twinless_components(fixture_graph("fig5"));
    CHECK(sets1(r.components) == std::vector<std::vector<int>>{{1, 2, 3, 4, 5}});
  }
  SUBCASE("fig2: the whole vertex set") {
    Vtcc2Report r = two_vertex_twinless_components(fixture_graph("fig2"));
    CHECK(sets1(r.components) == std::vector<std::vector<int>>{{1, 2, 3, 4, 5, 6}});
  }
  SUBCASE("C3 has none") {
    CHECK(two_vertex_twinless_components(c3()).components.empty());
  }
  SUBCASE("longer plain cycles: every vertex is a SAP, nothing is emitted") {
    // exercises the all-articulation-point pivot branch
    DirectedGraph c5 = g1(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
    CHECK(two_vertex_twinless_components(c5).components.empty());
    DirectedGraph c8 =
        g1(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 1}});
    CHECK(two_vertex_twinless_components(c8).components.empty());
  }
  SUBCASE("requires twinless strong connectivity") {
    CHECK_THROWS_AS(two_vertex_twinless_components(two_cycle()), PreconditionError);
  }
}

TEST_CASE("fig1 strictness: 2VTCC is a strict subset of the 2VCC") {
  OracleBudget wide;
  wide.max_n = 10;
  DirectedGraph g = fixture_graph("fig1");
  auto vccs = oracle_2vcc(g, wide);
  REQUIRE(vccs.size() == 1);
  CHECK(verts1(vccs[0]) == std::vector<int>{1, 2, 3, 4, 5, 6, 8, 9, 10});
  Vtcc2Report r = two_vertex_twinless_components(g);
  for (const VertexSet& c : r.components) {
    CHECK(c.size() < vccs[0].size());
    CHECK(std::includes(vccs[0].begin(), vccs[0].end(), c.begin(), c.end()));
  }
}

TEST_CASE("2vtcc equals the oracle on random graphs") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);
    DirectedGraph g = gen_random_tsc(n, clamp_m(n, n + static_cast<int>(seed % 5)), seed + 81);
    Vtcc2Report mine = two_vertex_twinless_components(g);
    auto expected = oracle_2vtcc(g);
    CHECK(sets1(mine.components) == sets1(expected));

    // pairwise intersections stay at a single vertex
    for (size_t i = 0; i < mine.components.size(); ++i)
      for (size_t j = i + 1; j < mine.components.size(); ++j) {
        std::vector<int> common;
        std::set_intersection(mine.components[i].begin(), mine.components[i].end(),
                              mine.components[j].begin(), mine.components[j].end(),
                              std::back_inserter(common));
        CHECK(common.size() <= 1);
      }

    // each component sits inside some 2VCC
    auto vccs = oracle_2vcc(g);
    for (const VertexSet& c : mine.components) {
      bool inside = false;
      for (const VertexSet& big : vccs)
        if (std::includes(big.begin(), big.end(), c.begin(), c.end())) inside = true;
      CHECK(inside);
    }
  }
}
