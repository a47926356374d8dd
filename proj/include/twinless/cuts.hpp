#pragma once

#include <string>

#include "twinless/graph.hpp"

namespace twinless {

struct TwinlessCutReport {
  VertexSet taps;
  EdgeSet tbridges;
  std::string method;
  int seed_count = 0;    // strong articulation points / strong bridges found first
  int tested_count = 0;  // remaining candidates run through the 2EC test
  // Set when twinless_bridges_basic was handed a strongly connected graph
  // that is not twinless strongly connected: every edge removal then yields
  // a non-TSC subgraph, so the report lists all edges.
  bool degraded_non_tsc_input = false;
};

// Twinless articulation points. Requires g twinless strongly connected with
// n >= 3. Seeds with the strong articulation points, then tests each
// remaining vertex x via 2-edge-connectivity of the underlying graph minus
// x (G minus x stays strongly connected for non-SAP x).
TwinlessCutReport twinless_articulation_points(const DirectedGraph& g);

// Twinless bridges of a strongly connected graph: strong bridges plus every
// other edge whose removal leaves a non-2-edge-connected underlying graph.
TwinlessCutReport twinless_bridges_basic(const DirectedGraph& g);

// Same set, but candidates restricted to the sparse certificate produced by
// the two-trees 3-approximation: edges outside it leave a twinless strongly
// connected spanning subgraph behind, so they are never twinless bridges.
// Requires g twinless strongly connected.
TwinlessCutReport twinless_bridges_sparse(const DirectedGraph& g);

// |V| > 2, twinless strongly connected, and no twinless bridges.
bool is_two_edge_twinless_connected(const DirectedGraph& g);

}  // namespace twinless
