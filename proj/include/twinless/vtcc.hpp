#pragma once

#include "twinless/graph.hpp"

namespace twinless {

struct Vtcc2Report {
  std::vector<VertexSet> components;  // each of size >= 3, sorted by members
  int recursion_depth = 0;
  int subproblem_count = 0;
};

// |V| >= 3, twinless strongly connected, and no twinless articulation point.
bool is_two_vertex_twinless_connected(const DirectedGraph& g);

// Drops duplicates and sets contained in another candidate.
Vtcc2Report collect_and_dedup(const std::vector<VertexSet>& candidates);

// 2-vertex-twinless-connected components via recursive dominator-tree
// decomposition. Requires g twinless strongly connected. Recursion branches
// that are 2VTC emit their vertex sets; collected output is deduplicated and
// filtered down to maximal sets.
Vtcc2Report two_vertex_twinless_components(const DirectedGraph& g);

}  // namespace twinless
