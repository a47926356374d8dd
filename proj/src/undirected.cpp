#include "twinless/undirected.hpp"

#include <algorithm>

namespace twinless {

namespace {

// Iterative bridge search (low-link). Works on the graph minus an optional
// vertex and uedge so the twinless candidate loops can reuse one underlying
// graph. Explicit stack: inputs can be large and deep.
struct BridgeDfs {
  const UnderlyingGraph& u;
  Vertex skip_v;
  int skip_e;
  std::vector<int> disc, low;
  std::vector<char> is_bridge;
  int timer = 0;
  int visited = 0;

  BridgeDfs(const UnderlyingGraph& ug, Vertex sv, int se)
      : u(ug), skip_v(sv), skip_e(se), disc(ug.n, -1), low(ug.n, 0),
        is_bridge(ug.uedge_count(), 0) {}

  Vertex other(int ue, Vertex v) const {
    return u.uedges[ue].a == v ? u.uedges[ue].b : u.uedges[ue].a;
  }

  bool usable(int ue, Vertex from) const {
    if (ue == skip_e) return false;
    return other(ue, from) != skip_v;
  }

  void run(Vertex root) {
    struct Frame {
      Vertex v;
      int enter_edge;  // uedge used to reach v, -1 at root
      size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({root, -1});
    disc[root] = low[root] = timer++;
    ++visited;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < u.adj[f.v].size()) {
        int ue = u.adj[f.v][f.next++];
        if (ue == f.enter_edge || !usable(ue, f.v)) continue;
        Vertex w = other(ue, f.v);
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          ++visited;
          stack.push_back({w, ue});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.v] = std::min(low[parent.v], low[done.v]);
          if (low[done.v] > disc[parent.v]) is_bridge[done.enter_edge] = 1;
        }
      }
    }
  }
};

}  // namespace

bool is_connected(const UnderlyingGraph& u) {
  if (u.n <= 1) return true;
  BridgeDfs dfs(u, -1, -1);
  dfs.run(0);
  return dfs.visited == u.n;
}

BridgeReport bridges_and_2ecc(const UnderlyingGraph& u) {
  BridgeDfs dfs(u, -1, -1);
  for (Vertex v = 0; v < u.n; ++v)
    if (dfs.disc[v] < 0) dfs.run(v);

  std::vector<int> bridge_ids;
  for (int e = 0; e < u.uedge_count(); ++e)
    if (dfs.is_bridge[e]) bridge_ids.push_back(e);

  // 2ECCs: connected components after deleting the bridges.
  BridgeReport report;
  report.bridges = EdgeSet(std::move(bridge_ids));
  report.two_ecc.label.assign(u.n, -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < u.n; ++s) {
    if (report.two_ecc.label[s] >= 0) continue;
    int id = next++;
    stack.push_back(s);
    report.two_ecc.label[s] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (int ue : u.adj[v]) {
        if (dfs.is_bridge[ue]) continue;
        Vertex w = u.uedges[ue].a == v ? u.uedges[ue].b : u.uedges[ue].a;
        if (report.two_ecc.label[w] < 0) {
          report.two_ecc.label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  report.two_ecc.count = next;
  return report;
}

bool is_two_edge_connected(const UnderlyingGraph& u) {
  return is_two_edge_connected_without(u, -1, -1);
}

bool is_two_edge_connected_without(const UnderlyingGraph& u, Vertex skip_vertex,
                                   int skip_uedge) {
  int remaining = u.n - (skip_vertex >= 0 ? 1 : 0);
  if (remaining <= 1) return true;
  Vertex root = (skip_vertex == 0) ? 1 : 0;
  BridgeDfs dfs(u, skip_vertex, skip_uedge);
  dfs.run(root);
  if (dfs.visited != remaining) return false;
  for (int e = 0; e < u.uedge_count(); ++e)
    if (dfs.is_bridge[e]) return false;
  return true;
}

}  // namespace twinless
