#include <doctest.h>

#include "testutil.hpp"
#include "twinless/edge_list.hpp"
#include "twinless/errors.hpp"
#include "twinless/generate.hpp"
#include "twinless/strong.hpp"
#include "twinless/tscc.hpp"

using namespace twinless;

TEST_CASE("gen_cycle") {
  DirectedGraph g = gen_cycle(5);
  CHECK(g.edge_count() == 5);
  CHECK(is_strongly_connected(g));
  CHECK(is_twinless_strongly_connected(g));
  CHECK(gen_cycle(1).edge_count() == 0);
  CHECK(gen_cycle(2).edge_count() == 2);
  CHECK_THROWS_AS(gen_cycle(0), InputError);
}

TEST_CASE("gen_random_sc holds its advertised property") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    DirectedGraph g = gen_random_sc(8, 14, seed);
    CHECK(g.n == 8);
    CHECK(g.edge_count() == 14);
    CHECK(is_strongly_connected(g));
  }
  CHECK_THROWS_AS(gen_random_sc(5, 4, 1), InputError);
  CHECK_THROWS_AS(gen_random_sc(3, 7, 1), InputError);
}

TEST_CASE("gen_random_tsc holds its advertised property") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    DirectedGraph g = gen_random_tsc(7, 9, seed);
    CHECK(is_twinless_strongly_connected(g));
    CHECK(g.edge_count() >= 9);
  }
  CHECK_THROWS_AS(gen_random_tsc(2, 2, 1), InputError);
}

TEST_CASE("identical seeds give byte-identical graphs") {
  CHECK(serialize_edge_list(gen_random_sc(9, 20, 42)) ==
        serialize_edge_list(gen_random_sc(9, 20, 42)));
  CHECK(serialize_edge_list(gen_random_tsc(9, 12, 42)) ==
        serialize_edge_list(gen_random_tsc(9, 12, 42)));
  CHECK(serialize_edge_list(gen_random_sc(9, 20, 42)) !=
        serialize_edge_list(gen_random_sc(9, 20, 43)));
}

TEST_CASE("Rng::below is deterministic and in range") {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) {
    uint64_t x = a.below(10);
    CHECK(x == b.below(10));
    CHECK(x < 10);
  }
}
