#pragma once

#include <functional>
#include <map>
#include <string>

#include "twinless/graph.hpp"
#include "twinless/tscc.hpp"

namespace twinless {

struct IterationRecord {
  int edge_added = -1;
  std::vector<int> edges_removed;
  int tsccs_before = 0;
  int tsccs_after = 0;
};

struct SpanningSubgraphResult {
  EdgeSet edges;
  std::string algorithm;
  std::vector<IterationRecord> trace;
  int size_bound = 0;  // 3n-3, 2n-2, or the baseline size for the repair variants
  bool bound_held = false;
};

// Produces a strongly connected spanning edge set for the repair variants.
using BaselineSolver = std::function<EdgeSet(const DirectedGraph&)>;

// Out-branching from root unioned with an in-branching to root: a strongly
// connected spanning subgraph with at most 2n-2 edges. Requires g strongly
// connected.
EdgeSet two_trees_subgraph(const DirectedGraph& g, Vertex root);

// Grows the two-trees subgraph by one cross-TSCC edge per iteration until
// twinless strongly connected. At most 3n-3 edges. Requires g twinless
// strongly connected.
SpanningSubgraphResult mtscss_3approx(const DirectedGraph& g);

// S^{wv}_p: for every arc of the w->v path that crosses a condensation tree
// edge, the reverse arc of the antiparallel pair realizing it. Arguments
// live in g_t's id space, where g_t is the spanning subgraph the
// condensation was computed on. Throws if v and w share a TSCC or the set
// comes out empty (both impossible when the caller upholds the contract).
EdgeSet twin_removal_set(const DirectedGraph& g_t, const TsccCondensation& cond,
                         const std::vector<int>& path_from_w_to_v, Vertex v, Vertex w);

// Like the 3-approximation, but after inserting (v,w) drops the twins found
// along a path from w to v, so the size never exceeds the initial 2n-2.
SpanningSubgraphResult mtscss_2approx(const DirectedGraph& g);

// Turns any strongly connected spanning subgraph into a twinless strongly
// connected one without increasing its size: insert one cross-TSCC edge,
// remove at least one twin, repeat. Default baseline: two_trees_subgraph
// rooted at vertex 0. Requires g twinless strongly connected.
SpanningSubgraphResult mtscss_repair(const DirectedGraph& g,
                                     const BaselineSolver& baseline = {});

// Same contract as mtscss_repair. Computes the TSCC structure once, then
// maintains it with union-find and a contracted condensation tree while
// scanning the non-baseline edges a single time.
SpanningSubgraphResult mtscss_repair_fast(const DirectedGraph& g,
                                          const BaselineSolver& baseline = {});

// Underlying tree of a TSCC condensation, supporting path queries and path
// contraction. Node ids are the original TSCC ids; a contraction keeps the
// first node of the path as the survivor.
class ContractedTsccTree {
 public:
  explicit ContractedTsccTree(const TsccCondensation& cond);

  struct PathStep {
    int from_node;
    int to_node;
    TsccTreeEdge edge;
  };

  int node_count() const { return alive_; }
  bool has_node(int id) const;

  // Unique tree path between two live nodes; empty when from == to.
  std::vector<PathStep> path(int from, int to) const;

  // Merges every node on the path into path.front().from_node.
  void contract_path(const std::vector<PathStep>& path);

 private:
  std::vector<std::map<int, TsccTreeEdge>> adj_;
  std::vector<char> live_;
  int alive_ = 0;
};

}  // namespace twinless
