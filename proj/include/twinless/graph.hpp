#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace twinless {

// Vertices are dense 0-based ids internally. External formats (edge list
// files, CLI output, fixture tables) are 1-based; conversion happens at the
// IO boundary only.
using Vertex = int;

struct Edge {
  Vertex from = -1;
  Vertex to = -1;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.from == b.from && a.to == b.to;
  }
};

// Sorted set of small non-negative ids (vertex ids or edge ids).
// Iteration is always in ascending id order.
class IdSet {
 public:
  IdSet() = default;
  explicit IdSet(std::vector<int> ids);

  bool contains(int id) const;
  const std::vector<int>& ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }

  friend bool operator==(const IdSet& a, const IdSet& b) { return a.ids_ == b.ids_; }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

 private:
  std::vector<int> ids_;  // sorted, unique
};

using VertexSet = IdSet;
using EdgeSet = IdSet;

// Simple directed graph: no self-loops, no duplicate arcs. Immutable after
// construction, so instances can be shared freely across threads.
//
// Edge ids are indices into `edges` and are stable for the lifetime of the
// graph. Adjacency lists store edge ids in ascending order.
struct DirectedGraph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out_adj;  // vertex -> outgoing edge ids
  std::vector<std::vector<int>> in_adj;   // vertex -> incoming edge ids

  int edge_count() const { return static_cast<int>(edges.size()); }

  // Edge id of (u,v), or -1. Requires the lookup index (present on every
  // graph built through build_graph/reverse; subgraph helpers may skip it).
  int find_edge(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v) >= 0; }
  bool has_lookup_index() const { return !by_endpoint_.empty() || edges.empty(); }

  // Edge ids sorted by (from,to); built by finalize().
  std::vector<int32_t> by_endpoint_;
};

struct BuildStats {
  int self_loops_dropped = 0;
  int duplicates_dropped = 0;
};

// Normalizes the raw pair list: drops self-loops and duplicate arcs, keeps
// first-occurrence order for edge ids. Pairs use 0-based vertex ids here.
// Throws InputError on out-of-range endpoints.
DirectedGraph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                          BuildStats* stats = nullptr);

// Graph with every arc flipped. Edge ids are preserved: edge i of the result
// is the reversal of edge i of g.
DirectedGraph reverse(const DirectedGraph& g);

struct InducedSubgraph {
  DirectedGraph graph;
  std::vector<Vertex> to_parent;   // subgraph vertex -> vertex of the parent graph
  std::vector<int> edge_to_parent; // subgraph edge id -> parent edge id
};

// Subgraph induced on the given vertices; vertex ids are relabeled densely
// in ascending order of the original ids.
InducedSubgraph induced_subgraph(const DirectedGraph& g, const VertexSet& keep);
InducedSubgraph remove_vertex(const DirectedGraph& g, Vertex v);

// Same vertex set, one arc removed.
DirectedGraph remove_edge(const DirectedGraph& g, int edge_id);

// Undirected edge {a,b} (a < b) together with the directed arcs generating
// it: one of fwd_edge/rev_edge may be -1, both present means an antiparallel
// pair collapsed onto this edge.
struct UEdge {
  Vertex a = -1;
  Vertex b = -1;
  int fwd_edge = -1;  // edge id of (a,b) in the source graph
  int rev_edge = -1;  // edge id of (b,a)

  int origin_count() const { return (fwd_edge >= 0 ? 1 : 0) + (rev_edge >= 0 ? 1 : 0); }
};

struct UnderlyingGraph {
  int n = 0;
  std::vector<UEdge> uedges;
  std::vector<std::vector<int>> adj;  // vertex -> uedge ids

  int uedge_count() const { return static_cast<int>(uedges.size()); }
  // UEdge id joining a and b, or -1.
  int find_uedge(Vertex a, Vertex b) const;
};

// Collapses each arc (and its twin, if present) onto one undirected edge.
UnderlyingGraph underlying_graph(const DirectedGraph& g);

// Partition of vertices into components. Ids are normalized so that
// component 0 is the one containing the lowest vertex id, component 1 the
// next new one encountered scanning vertices in ascending order, and so on.
struct ComponentLabeling {
  std::vector<int> label;  // vertex -> component id
  int count = 0;

  std::vector<std::vector<Vertex>> members() const;
  void normalize();
};

}  // namespace twinless
