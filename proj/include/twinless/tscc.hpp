#pragma once

#include "twinless/graph.hpp"

namespace twinless {

// One edge of the TSCC condensation tree. Inside a strongly connected graph
// the underlying graph of the condensation is a tree, and each tree edge is
// realized by exactly one antiparallel arc pair of the source graph.
struct TsccTreeEdge {
  int comp_a = -1;  // TSCC ids, comp_a < comp_b
  int comp_b = -1;
  int edge_ab = -1;  // edge id of the arc leaving comp_a's side
  int edge_ba = -1;  // edge id of the arc leaving comp_b's side
};

struct TsccCondensation {
  ComponentLabeling labels;
  std::vector<TsccTreeEdge> tree_edges;
  std::vector<std::vector<int>> tree_adj;  // TSCC id -> incident tree edge ids
};

// Strongly connected AND the underlying graph is 2-edge-connected. Graphs
// with at most one vertex qualify.
bool is_twinless_strongly_connected(const DirectedGraph& g);

// Twinless strongly connected components: within each SCC these are the
// 2-edge-connected components of that SCC's underlying graph; vertices in
// different SCCs never share a class.
ComponentLabeling tsccs(const DirectedGraph& g);

// Condensation of a strongly connected graph into its TSCCs, with the tree
// structure and the antiparallel pair realizing each tree edge. Throws
// PreconditionError if g is not strongly connected.
TsccCondensation tscc_condensation(const DirectedGraph& g);

// The unique tree path between the TSCCs of a and b, listed from a's side.
// Empty when they share a TSCC.
std::vector<TsccTreeEdge> tscc_tree_path(const TsccCondensation& c, Vertex a, Vertex b);

}  // namespace twinless
