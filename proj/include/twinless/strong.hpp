#pragma once

#include "twinless/graph.hpp"

namespace twinless {

// Dominator tree of the flowgraph (V, E, root). idom[root] == root;
// children[w] is the set M(w) of direct successors of w in the tree.
struct DominatorTree {
  Vertex root = -1;
  std::vector<Vertex> idom;
  std::vector<std::vector<Vertex>> children;
};

struct StrongCutReport {
  VertexSet saps;
  EdgeSet sbridges;
  int s_tap_count = 0;
  int s_tb_count = 0;
};

// Strongly connected components (Tarjan, explicit stack).
ComponentLabeling sccs(const DirectedGraph& g);

// Exactly one SCC covering all vertices; graphs with at most one vertex
// count as strongly connected.
bool is_strongly_connected(const DirectedGraph& g);

// Strong connectivity of g minus a vertex and/or an edge (-1 to skip
// nothing), without materializing the subgraph.
bool is_strongly_connected_without(const DirectedGraph& g, Vertex skip_vertex,
                                   int skip_edge);

// Lengauer-Tarjan semidominators with the semi-NCA idom pass. Throws
// PreconditionError if some vertex is unreachable from root.
DominatorTree dominator_tree(const DirectedGraph& g, Vertex root);

// Internal non-root vertices of the dominator tree (vertices that strictly
// dominate some other vertex besides themselves).
VertexSet nontrivial_dominators(const DirectedGraph& g, Vertex root);
VertexSet nontrivial_dominators(const DominatorTree& t);

// Vertices whose removal destroys strong connectivity. Requires g strongly
// connected with n >= 3.
VertexSet strong_articulation_points(const DirectedGraph& g);

// Edges whose removal destroys strong connectivity. Requires g strongly
// connected. Candidates come from the forward/reverse dominator trees; each
// is confirmed with a reachability recheck.
EdgeSet strong_bridges(const DirectedGraph& g);

StrongCutReport strong_cut_report(const DirectedGraph& g);

// n >= 3, strongly connected, and no strong articulation points.
bool is_two_vertex_connected(const DirectedGraph& g);

}  // namespace twinless
