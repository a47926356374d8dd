#include "twinless/tscc.hpp"

#include <algorithm>
#include <string>

#include "twinless/errors.hpp"
#include "twinless/strong.hpp"
#include "twinless/undirected.hpp"

namespace twinless {

bool is_twinless_strongly_connected(const DirectedGraph& g) {
  if (g.n <= 1) return true;
  if (!is_strongly_connected(g)) return false;
  return is_two_edge_connected(underlying_graph(g));
}

ComponentLabeling tsccs(const DirectedGraph& g) {
  ComponentLabeling scc = sccs(g);
  ComponentLabeling out;
  out.label.assign(g.n, -1);
  int next = 0;
  for (const auto& comp : scc.members()) {
    InducedSubgraph sub = induced_subgraph(g, VertexSet(comp));
    BridgeReport br = bridges_and_2ecc(underlying_graph(sub.graph));
    for (Vertex v = 0; v < sub.graph.n; ++v)
      out.label[sub.to_parent[v]] = next + br.two_ecc.label[v];
    next += br.two_ecc.count;
  }
  out.count = next;
  out.normalize();
  return out;
}

TsccCondensation tscc_condensation(const DirectedGraph& g) {
  if (!is_strongly_connected(g))
    throw PreconditionError("tscc_condensation: graph is not strongly connected");
  TsccCondensation c;
  c.labels = tsccs(g);
  c.tree_adj.assign(c.labels.count, {});

  // Every arc joining two TSCCs belongs to the antiparallel pair realizing
  // that tree edge; collect each pair once.
  struct Cross {
    int la, lb, edge_id;
    bool forward;  // arc leaves the la side
  };
  std::vector<Cross> cross;
  for (int e = 0; e < g.edge_count(); ++e) {
    int lu = c.labels.label[g.edges[e].from];
    int lv = c.labels.label[g.edges[e].to];
    if (lu == lv) continue;
    cross.push_back(lu < lv ? Cross{lu, lv, e, true} : Cross{lv, lu, e, false});
  }
  std::sort(cross.begin(), cross.end(), [](const Cross& x, const Cross& y) {
    return x.la != y.la ? x.la < y.la : x.lb < y.lb;
  });
  for (size_t i = 0; i < cross.size();) {
    size_t j = i;
    TsccTreeEdge te{cross[i].la, cross[i].lb, -1, -1};
    while (j < cross.size() && cross[j].la == te.comp_a && cross[j].lb == te.comp_b) {
      int& slot = cross[j].forward ? te.edge_ab : te.edge_ba;
      if (slot >= 0)
        throw InternalError("tscc_condensation: more than one arc in the same direction "
                            "between adjacent TSCCs");
      slot = cross[j].edge_id;
      ++j;
    }
    if (te.edge_ab < 0 || te.edge_ba < 0)
      throw InternalError("tscc_condensation: tree edge not realized by an antiparallel pair");
    int id = static_cast<int>(c.tree_edges.size());
    c.tree_edges.push_back(te);
    c.tree_adj[te.comp_a].push_back(id);
    c.tree_adj[te.comp_b].push_back(id);
    i = j;
  }
  if (static_cast<int>(c.tree_edges.size()) != c.labels.count - 1)
    throw InternalError("tscc_condensation: condensation is not a tree (" +
                        std::to_string(c.tree_edges.size()) + " edges, " +
                        std::to_string(c.labels.count) + " components)");
  return c;
}

std::vector<TsccTreeEdge> tscc_tree_path(const TsccCondensation& c, Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= static_cast<Vertex>(c.labels.label.size()) ||
      b >= static_cast<Vertex>(c.labels.label.size()))
    throw PreconditionError("tscc_tree_path: vertex out of range");
  int from = c.labels.label[a], to = c.labels.label[b];
  if (from == to) return {};

  // BFS over the tree; parents recover the unique path.
  std::vector<int> parent_edge(c.labels.count, -1);
  std::vector<char> seen(c.labels.count, 0);
  std::vector<int> queue{from};
  seen[from] = 1;
  for (size_t qi = 0; qi < queue.size() && !seen[to]; ++qi) {
    int u = queue[qi];
    for (int te : c.tree_adj[u]) {
      int w = c.tree_edges[te].comp_a == u ? c.tree_edges[te].comp_b : c.tree_edges[te].comp_a;
      if (!seen[w]) {
        seen[w] = 1;
        parent_edge[w] = te;
        queue.push_back(w);
      }
    }
  }
  if (!seen[to])
    throw InternalError("tscc_tree_path: condensation tree is disconnected");
  std::vector<TsccTreeEdge> path;
  for (int u = to; u != from;) {
    const TsccTreeEdge& te = c.tree_edges[parent_edge[u]];
    path.push_back(te);
    u = (te.comp_a == u) ? te.comp_b : te.comp_a;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace twinless
