#pragma once

#include <cstdint>
#include <random>

#include "twinless/graph.hpp"

namespace twinless {

// All generators draw from std::mt19937_64 seeded with the given value; the
// engine's output sequence is fixed by the C++ standard, and value reduction
// uses plain rejection sampling, so edge lists are reproducible everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound), unbiased via rejection.
  uint64_t below(uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Directed cycle 1 -> 2 -> ... -> n -> 1.
DirectedGraph gen_cycle(int n);

// Strongly connected by construction: a cycle through a random permutation,
// topped up with distinct random arcs until m edges. Requires m >= n (n >= 2)
// and m <= n(n-1).
DirectedGraph gen_random_sc(int n, int m, uint64_t seed);

// gen_random_sc, then repaired into a twinless strongly connected graph by
// inserting fresh cross-TSCC arcs (never creating antiparallel pairs) until
// the underlying graph is 2-edge-connected. Final edge count may exceed m.
// Requires n == 1 or n >= 3: no 2-vertex graph is twinless strongly
// connected.
DirectedGraph gen_random_tsc(int n, int m, uint64_t seed);

}  // namespace twinless
