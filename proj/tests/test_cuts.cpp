#include <doctest.h>

#include "testutil.hpp"
#include "twinless/cuts.hpp"
#include "twinless/errors.hpp"
#include "twinless/fixtures.hpp"
#include "twinless/generate.hpp"
#include "twinless/oracle.hpp"
#include "twinless/strong.hpp"
#include "twinless/tscc.hpp"

using namespace twinless;
using namespace twinless::testutil;

TEST_CASE("twinless articulation points on figures") {
  CHECK(verts1(twinless_articulation_points(c3()).taps) == std::vector<int>{1, 2, 3});

  TwinlessCutReport fig1 = twinless_articulation_points(fixture_graph("fig1"));
  CHECK(verts1(fig1.taps) == std::vector<int>{3, 4, 6, 9, 10});
  CHECK(fig1.seed_count == 2);
  CHECK(fig1.tested_count == 8);

  TwinlessCutReport fig5 = twinless_articulation_points(fixture_graph("fig5"));
  CHECK(fig5.taps.contains(4 - 1));

  CHECK_THROWS_AS(twinless_articulation_points(two_cycle()), PreconditionError);
  // strongly connected but not twinless strongly connected
  CHECK_THROWS_AS(twinless_articulation_points(g1(3, {{1, 2}, {2, 1}, {2, 3}, {3, 2}})),
                  PreconditionError);
}

TEST_CASE("twinless bridges on figures") {
  SUBCASE("C3: every edge") {
    CHECK(twinless_bridges_basic(c3()).tbridges.size() == 3);
  }
  SUBCASE("bare 2-cycle: both edges, flagged as degraded") {
    TwinlessCutReport r = twinless_bridges_basic(two_cycle());
    CHECK(r.tbridges.size() == 2);
    CHECK(r.degraded_non_tsc_input);
  }
  SUBCASE("fig2 has none") {
    DirectedGraph g = fixture_graph("fig2");
    CHECK(twinless_bridges_basic(g).tbridges.empty());
    TwinlessCutReport sparse = twinless_bridges_sparse(g);
    CHECK(sparse.tbridges.empty());
    CHECK(sparse.tested_count <= 3 * g.n);
  }
  SUBCASE("not strongly connected is an error") {
    CHECK_THROWS_AS(twinless_bridges_basic(g1(2, {{1, 2}})), PreconditionError);
    CHECK_THROWS_AS(twinless_bridges_sparse(g1(2, {{1, 2}})), PreconditionError);
  }
  SUBCASE("sparse requires twinless strong connectivity") {
    CHECK_THROWS_AS(twinless_bridges_sparse(two_cycle()), PreconditionError);
  }
}

TEST_CASE("cut sets match the definitional oracle") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);
    DirectedGraph g = gen_random_tsc(n, clamp_m(n, n + static_cast<int>(seed % 5)), seed + 31);
    OracleCuts expected = oracle_cuts(g);

    TwinlessCutReport taps = twinless_articulation_points(g);
    CHECK(taps.taps == expected.taps);

    TwinlessCutReport basic = twinless_bridges_basic(g);
    TwinlessCutReport sparse = twinless_bridges_sparse(g);
    CHECK(basic.tbridges == expected.tbridges);
    CHECK(sparse.tbridges == basic.tbridges);

    // seed containment: strong cuts are always twinless cuts
    for (int v : expected.saps) CHECK(taps.taps.contains(v));
    for (int e : expected.sbridges) CHECK(basic.tbridges.contains(e));
  }
}

TEST_CASE("fig1 shows strict seed containment") {
  DirectedGraph g = fixture_graph("fig1");
  VertexSet saps = strong_articulation_points(g);
  TwinlessCutReport taps = twinless_articulation_points(g);
  CHECK_FALSE(saps.contains(4 - 1));
  CHECK(taps.taps.contains(4 - 1));
}

TEST_CASE("2-edge-connected iff 2-edge-twinless-connected") {
  // strongly connected test graphs with |V| > 2
  for (uint64_t seed = 0; seed < 40; ++seed) {
    int n = 3 + static_cast<int>(seed % 6);
    DirectedGraph g = gen_random_sc(n, clamp_m(n, n + static_cast<int>(seed % 7)), seed + 41);
    bool sb_empty = strong_bridges(g).empty();
    bool tb_empty = twinless_bridges_basic(g).tbridges.empty();
    CHECK(sb_empty == tb_empty);
  }
}

TEST_CASE("is_two_edge_twinless_connected") {
  CHECK(is_two_edge_twinless_connected(fixture_graph("fig2")));
  CHECK_FALSE(is_two_edge_twinless_connected(c3()));
  CHECK_FALSE(is_two_edge_twinless_connected(two_cycle()));
}
