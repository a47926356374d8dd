#pragma once

#include <optional>

#include "twinless/graph.hpp"

namespace twinless {

// Brute-force reference implementations of the definitions. Test and
// acceptance code only; every call checks its budget before enumerating.
struct OracleBudget {
  int max_n = 8;
  int max_antiparallel_pairs = 12;
  int max_subset_enumeration = 14;  // edges, for minimum-subgraph search
};

// Definitional test: some strongly connected spanning subgraph keeps one arc
// of every antiparallel pair (and all unpaired arcs). 2^k subgraph checks.
bool oracle_is_tsc(const DirectedGraph& g, const OracleBudget& budget = {});

// Classes of the relation "some orientation choice puts v and w in one
// SCC". The relation is an equivalence; a transitivity violation throws
// InternalError rather than being papered over by union-find.
ComponentLabeling oracle_tscc_relation(const DirectedGraph& g, const OracleBudget& budget = {});

// Exact minimum sizes of strongly connected / twinless strongly connected
// spanning edge subsets, by subset enumeration in increasing cardinality.
// nullopt when no such spanning subgraph exists.
std::optional<int> oracle_min_scss(const DirectedGraph& g, const OracleBudget& budget = {});
std::optional<int> oracle_min_tscss(const DirectedGraph& g, const OracleBudget& budget = {});

struct OracleCuts {
  VertexSet taps;
  EdgeSet tbridges;
  VertexSet saps;
  EdgeSet sbridges;
};

// Exhaustive single-removal sweeps against the definitions.
OracleCuts oracle_cuts(const DirectedGraph& g, const OracleBudget& budget = {});

// Maximal vertex sets (size >= 3) inducing 2-vertex-twinless-connected /
// 2-vertex-connected subgraphs, by subset enumeration.
std::vector<VertexSet> oracle_2vtcc(const DirectedGraph& g, const OracleBudget& budget = {});
std::vector<VertexSet> oracle_2vcc(const DirectedGraph& g, const OracleBudget& budget = {});

}  // namespace twinless
