#pragma once

#include "twinless/graph.hpp"

namespace twinless {

struct BridgeReport {
  EdgeSet bridges;            // uedge ids
  ComponentLabeling two_ecc;  // 2-edge-connected components
};

// True iff one connected component covers all vertices; graphs with at most
// one vertex count as connected.
bool is_connected(const UnderlyingGraph& u);

BridgeReport bridges_and_2ecc(const UnderlyingGraph& u);

// Connected and bridge-free. Graphs with at most one vertex are
// 2-edge-connected by convention; a single edge on two vertices is not.
bool is_two_edge_connected(const UnderlyingGraph& u);

// Same predicate on u minus one vertex and/or one uedge (-1 to skip
// nothing). Avoids rebuilding the underlying graph inside candidate loops:
// the underlying graph of G minus a vertex (or minus an unpaired arc) is the
// underlying graph of G minus that vertex (or uedge).
bool is_two_edge_connected_without(const UnderlyingGraph& u, Vertex skip_vertex,
                                   int skip_uedge);

}  // namespace twinless
