#include "twinless/mtscss.hpp"

#include <algorithm>
#include <string>

#include "twinless/disjoint_sets.hpp"
#include "twinless/errors.hpp"
#include "twinless/strong.hpp"
#include "twinless/undirected.hpp"

namespace twinless {

namespace {

// (V, selected edges) as a graph of its own. Vertex ids carry over; edge ids
// are remapped, with sub2g translating back.
DirectedGraph subgraph_of(const DirectedGraph& g, const std::vector<char>& mask,
                          std::vector<int>* sub2g) {
  DirectedGraph h;
  h.n = g.n;
  sub2g->clear();
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!mask[e]) continue;
    h.edges.push_back(g.edges[e]);
    sub2g->push_back(e);
  }
  h.out_adj.assign(h.n, {});
  h.in_adj.assign(h.n, {});
  for (int e = 0; e < h.edge_count(); ++e) {
    h.out_adj[h.edges[e].from].push_back(e);
    h.in_adj[h.edges[e].to].push_back(e);
  }
  return h;
}

// Edge ids of a shortest path from `from` to `to`; empty when from == to.
std::vector<int> bfs_edge_path(const DirectedGraph& g, Vertex from, Vertex to) {
  if (from == to) return {};
  std::vector<int> parent_edge(g.n, -1);
  std::vector<char> seen(g.n, 0);
  std::vector<Vertex> queue{from};
  seen[from] = 1;
  for (size_t qi = 0; qi < queue.size() && !seen[to]; ++qi) {
    Vertex v = queue[qi];
    for (int e : g.out_adj[v]) {
      Vertex w = g.edges[e].to;
      if (!seen[w]) {
        seen[w] = 1;
        parent_edge[w] = e;
        queue.push_back(w);
      }
    }
  }
  if (!seen[to]) throw InternalError("bfs_edge_path: target unreachable");
  std::vector<int> path;
  for (Vertex v = to; v != from; v = g.edges[parent_edge[v]].from)
    path.push_back(parent_edge[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

// First edge outside the mask whose endpoints lie in different classes.
int first_cross_edge(const DirectedGraph& g, const std::vector<char>& mask,
                     const ComponentLabeling& labels) {
  for (int e = 0; e < g.edge_count(); ++e) {
    if (mask[e]) continue;
    if (labels.label[g.edges[e].from] != labels.label[g.edges[e].to]) return e;
  }
  return -1;
}

EdgeSet mask_to_set(const std::vector<char>& mask) {
  std::vector<int> ids;
  for (int e = 0; e < static_cast<int>(mask.size()); ++e)
    if (mask[e]) ids.push_back(e);
  return EdgeSet(std::move(ids));
}

}  // namespace

EdgeSet two_trees_subgraph(const DirectedGraph& g, Vertex root) {
  if (!is_strongly_connected(g))
    throw PreconditionError("two_trees_subgraph: graph is not strongly connected");
  if (root < 0 || root >= g.n) throw PreconditionError("two_trees_subgraph: bad root");

  std::vector<int> picked;
  std::vector<char> seen(g.n, 0);
  std::vector<Vertex> queue;

  // Out-branching over out_adj, then in-branching over in_adj; the latter is
  // the reversal of an out-branching in the reverse graph, with native ids.
  for (bool forward : {true, false}) {
    seen.assign(g.n, 0);
    queue.assign(1, root);
    seen[root] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      Vertex v = queue[qi];
      const auto& adj = forward ? g.out_adj[v] : g.in_adj[v];
      for (int e : adj) {
        Vertex w = forward ? g.edges[e].to : g.edges[e].from;
        if (!seen[w]) {
          seen[w] = 1;
          picked.push_back(e);
          queue.push_back(w);
        }
      }
    }
  }
  return EdgeSet(std::move(picked));
}

EdgeSet twin_removal_set(const DirectedGraph& g_t, const TsccCondensation& cond,
                         const std::vector<int>& path_from_w_to_v, Vertex v, Vertex w) {
  if (cond.labels.label[v] == cond.labels.label[w])
    throw PreconditionError("twin_removal_set: v and w share a TSCC");

  std::vector<int> removals;
  for (int e : path_from_w_to_v) {
    int li = cond.labels.label[g_t.edges[e].from];
    int lj = cond.labels.label[g_t.edges[e].to];
    if (li == lj) continue;
    int a = std::min(li, lj), b = std::max(li, lj);
    const TsccTreeEdge* te = nullptr;
    for (int id : cond.tree_adj[a]) {
      if (cond.tree_edges[id].comp_a == a && cond.tree_edges[id].comp_b == b) {
        te = &cond.tree_edges[id];
        break;
      }
    }
    if (!te) throw InternalError("twin_removal_set: cross arc without a condensation tree edge");
    // The path arc leaves li's side; its twin is the arc of the pair that
    // leaves the other side.
    int twin = (li == te->comp_a) ? te->edge_ba : te->edge_ab;
    if ((li == te->comp_a ? te->edge_ab : te->edge_ba) != e)
      throw InternalError("twin_removal_set: path arc is not the stored pair arc");
    removals.push_back(twin);
  }
  if (removals.empty())
    throw InternalError("twin_removal_set: empty removal set for a cross insertion");
  return EdgeSet(std::move(removals));
}

namespace {

SpanningSubgraphResult grow_until_twinless(const DirectedGraph& g, std::vector<char> mask,
                                           bool remove_twins, std::string algorithm,
                                           int size_bound) {
  SpanningSubgraphResult result;
  result.algorithm = std::move(algorithm);
  result.size_bound = size_bound;

  std::vector<int> sub2g;
  DirectedGraph g_t = subgraph_of(g, mask, &sub2g);
  TsccCondensation cond = tscc_condensation(g_t);  // throws if the base is not SC

  while (cond.labels.count > 1) {
    int added = first_cross_edge(g, mask, cond.labels);
    if (added < 0)
      throw InternalError(result.algorithm +
                          ": no cross-TSCC edge available although the subgraph is not "
                          "twinless strongly connected");
    Vertex v = g.edges[added].from, w = g.edges[added].to;

    IterationRecord rec;
    rec.edge_added = added;
    rec.tsccs_before = cond.labels.count;

    if (remove_twins) {
      std::vector<int> path = bfs_edge_path(g_t, w, v);
      for (int s : twin_removal_set(g_t, cond, path, v, w)) {
        mask[sub2g[s]] = 0;
        rec.edges_removed.push_back(sub2g[s]);
      }
    }
    mask[added] = 1;

    g_t = subgraph_of(g, mask, &sub2g);
    if (!is_strongly_connected(g_t))
      throw InternalError(result.algorithm + ": subgraph lost strong connectivity");
    cond = tscc_condensation(g_t);
    rec.tsccs_after = cond.labels.count;
    if (rec.tsccs_after >= rec.tsccs_before)
      throw InternalError(result.algorithm + ": TSCC count failed to decrease");
    result.trace.push_back(std::move(rec));
  }

  result.edges = mask_to_set(mask);
  result.bound_held = result.edges.size() <= result.size_bound;
  return result;
}

std::vector<char> edge_mask(const DirectedGraph& g, const EdgeSet& edges) {
  std::vector<char> mask(g.edge_count(), 0);
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count())
      throw PreconditionError("baseline produced an edge id outside the graph");
    mask[e] = 1;
  }
  return mask;
}

void require_tsc(const DirectedGraph& g, const char* who) {
  if (!is_twinless_strongly_connected(g))
    throw PreconditionError(std::string(who) + ": graph is not twinless strongly connected");
}

EdgeSet run_baseline(const DirectedGraph& g, const BaselineSolver& baseline, const char* who) {
  EdgeSet base = baseline ? baseline(g) : two_trees_subgraph(g, 0);
  std::vector<int> sub2g;
  DirectedGraph g_b = subgraph_of(g, edge_mask(g, base), &sub2g);
  if (!is_strongly_connected(g_b))
    throw PreconditionError(std::string(who) + ": baseline subgraph is not strongly connected");
  return base;
}

}  // namespace

SpanningSubgraphResult mtscss_3approx(const DirectedGraph& g) {
  require_tsc(g, "mtscss_3approx");
  EdgeSet base = two_trees_subgraph(g, 0);
  return grow_until_twinless(g, edge_mask(g, base), false, "3approx",
                             std::max(0, 3 * g.n - 3));
}

SpanningSubgraphResult mtscss_2approx(const DirectedGraph& g) {
  require_tsc(g, "mtscss_2approx");
  EdgeSet base = two_trees_subgraph(g, 0);
  return grow_until_twinless(g, edge_mask(g, base), true, "2approx",
                             std::max(0, 2 * g.n - 2));
}

SpanningSubgraphResult mtscss_repair(const DirectedGraph& g, const BaselineSolver& baseline) {
  require_tsc(g, "mtscss_repair");
  EdgeSet base = run_baseline(g, baseline, "mtscss_repair");
  return grow_until_twinless(g, edge_mask(g, base), true, "repair", base.size());
}

ContractedTsccTree::ContractedTsccTree(const TsccCondensation& cond)
    : adj_(cond.labels.count), live_(cond.labels.count, 1), alive_(cond.labels.count) {
  for (const TsccTreeEdge& te : cond.tree_edges) {
    adj_[te.comp_a][te.comp_b] = te;
    adj_[te.comp_b][te.comp_a] = te;
  }
}

bool ContractedTsccTree::has_node(int id) const {
  return id >= 0 && id < static_cast<int>(live_.size()) && live_[id];
}

std::vector<ContractedTsccTree::PathStep> ContractedTsccTree::path(int from, int to) const {
  if (!has_node(from) || !has_node(to))
    throw InternalError("ContractedTsccTree::path: dead node");
  if (from == to) return {};
  std::vector<int> parent(adj_.size(), -1);
  std::vector<char> seen(adj_.size(), 0);
  std::vector<int> queue{from};
  seen[from] = 1;
  for (size_t qi = 0; qi < queue.size() && !seen[to]; ++qi) {
    int u = queue[qi];
    for (const auto& [nbr, te] : adj_[u]) {
      if (!seen[nbr]) {
        seen[nbr] = 1;
        parent[nbr] = u;
        queue.push_back(nbr);
      }
    }
  }
  if (!seen[to]) throw InternalError("ContractedTsccTree::path: tree is disconnected");
  std::vector<PathStep> steps;
  for (int u = to; u != from; u = parent[u])
    steps.push_back({parent[u], u, adj_[parent[u]].at(u)});
  std::reverse(steps.begin(), steps.end());
  return steps;
}

void ContractedTsccTree::contract_path(const std::vector<PathStep>& path) {
  if (path.empty()) return;
  int survivor = path.front().from_node;
  for (const PathStep& s : path) {
    adj_[s.from_node].erase(s.to_node);
    adj_[s.to_node].erase(s.from_node);
  }
  for (const PathStep& s : path) {
    int dying = s.to_node;
    for (const auto& [nbr, te] : adj_[dying]) {
      adj_[nbr].erase(dying);
      if (nbr == survivor || adj_[survivor].count(nbr))
        throw InternalError("ContractedTsccTree: contraction would break the tree");
      adj_[survivor][nbr] = te;
      adj_[nbr][survivor] = te;
    }
    adj_[dying].clear();
    live_[dying] = 0;
    --alive_;
  }
}

SpanningSubgraphResult mtscss_repair_fast(const DirectedGraph& g,
                                          const BaselineSolver& baseline) {
  require_tsc(g, "mtscss_repair_fast");
  EdgeSet base = run_baseline(g, baseline, "mtscss_repair_fast");

  SpanningSubgraphResult result;
  result.algorithm = "repair-fast";
  result.size_bound = base.size();

  std::vector<char> mask = edge_mask(g, base);
  std::vector<int> sub2g;
  DirectedGraph g_t0 = subgraph_of(g, mask, &sub2g);
  TsccCondensation cond = tscc_condensation(g_t0);

  // Union-find over vertices mirrors the contracted tree: one class per
  // current supernode.
  DisjointSets dsu(g.n);
  std::vector<int> super_of_root(g.n, -1);
  std::vector<Vertex> rep(cond.labels.count, -1);
  {
    auto classes = cond.labels.members();
    for (int c = 0; c < cond.labels.count; ++c) {
      rep[c] = classes[c].front();
      for (Vertex v : classes[c]) dsu.unite(rep[c], v);
      super_of_root[dsu.find(rep[c])] = c;
    }
  }
  ContractedTsccTree tree(cond);

  for (int e = 0; e < g.edge_count() && tree.node_count() > 1; ++e) {
    if (mask[e]) continue;
    Vertex v = g.edges[e].from, w = g.edges[e].to;
    int rv = super_of_root[dsu.find(v)];
    int rw = super_of_root[dsu.find(w)];
    if (rv == rw) continue;

    IterationRecord rec;
    rec.edge_added = e;
    rec.tsccs_before = tree.node_count();

    auto steps = tree.path(rv, rw);
    mask[e] = 1;
    for (const auto& step : steps) {
      // Drop the pair arc leaving v's side of this tree edge; the arc
      // leaving w's side stays and carries the return path once (v,w) is in.
      Vertex a_side = g_t0.edges[step.edge.edge_ab].from;
      int a_node = super_of_root[dsu.find(a_side)];
      if (a_node != step.from_node && a_node != step.to_node)
        throw InternalError("mtscss_repair_fast: stale tree edge endpoints");
      int sub_id = (a_node == step.from_node) ? step.edge.edge_ab : step.edge.edge_ba;
      int g_id = sub2g[sub_id];
      if (!mask[g_id]) throw InternalError("mtscss_repair_fast: twin already removed");
      mask[g_id] = 0;
      rec.edges_removed.push_back(g_id);
    }
    tree.contract_path(steps);
    for (const auto& step : steps) {
      dsu.unite(rep[rv], rep[step.to_node]);
      super_of_root[dsu.find(rep[rv])] = rv;
    }
    rec.tsccs_after = tree.node_count();
    result.trace.push_back(std::move(rec));
  }

  if (tree.node_count() != 1)
    throw InternalError("mtscss_repair_fast: edge scan exhausted with " +
                        std::to_string(tree.node_count()) + " components remaining");

  result.edges = mask_to_set(mask);
  result.bound_held = result.edges.size() <= result.size_bound;

  std::vector<int> check_sub2g;
  DirectedGraph check = subgraph_of(g, mask, &check_sub2g);
  if (!is_strongly_connected(check) || !is_two_edge_connected(underlying_graph(check)))
    throw InternalError("mtscss_repair_fast: result is not twinless strongly connected");
  return result;
}

}  // namespace twinless
