#include "twinless/strong.hpp"

#include <algorithm>
#include <string>

#include "twinless/errors.hpp"

namespace twinless {

ComponentLabeling sccs(const DirectedGraph& g) {
  // Tarjan with an explicit frame stack.
  ComponentLabeling out;
  out.label.assign(g.n, -1);
  std::vector<int> disc(g.n, -1), low(g.n, 0);
  std::vector<char> on_stack(g.n, 0);
  std::vector<Vertex> comp_stack;
  struct Frame {
    Vertex v;
    size_t next = 0;
  };
  std::vector<Frame> stack;
  int timer = 0;
  int comp = 0;

  for (Vertex s = 0; s < g.n; ++s) {
    if (disc[s] >= 0) continue;
    stack.push_back({s});
    disc[s] = low[s] = timer++;
    comp_stack.push_back(s);
    on_stack[s] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < g.out_adj[f.v].size()) {
        Vertex w = g.edges[g.out_adj[f.v][f.next++]].to;
        if (disc[w] < 0) {
          disc[w] = low[w] = timer++;
          comp_stack.push_back(w);
          on_stack[w] = 1;
          stack.push_back({w});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        Vertex v = f.v;
        stack.pop_back();
        if (!stack.empty()) low[stack.back().v] = std::min(low[stack.back().v], low[v]);
        if (low[v] == disc[v]) {
          while (true) {
            Vertex w = comp_stack.back();
            comp_stack.pop_back();
            on_stack[w] = 0;
            out.label[w] = comp;
            if (w == v) break;
          }
          ++comp;
        }
      }
    }
  }
  out.count = comp;
  out.normalize();
  return out;
}

bool is_strongly_connected(const DirectedGraph& g) {
  return is_strongly_connected_without(g, -1, -1);
}

namespace {

// BFS from root over out_adj (or in_adj), skipping an optional vertex/edge.
int count_reachable(const DirectedGraph& g, Vertex root, bool forward, Vertex skip_v,
                    int skip_e, std::vector<char>& seen) {
  seen.assign(g.n, 0);
  std::vector<Vertex> queue;
  queue.reserve(g.n);
  queue.push_back(root);
  seen[root] = 1;
  int reached = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex v = queue[qi];
    const auto& adj = forward ? g.out_adj[v] : g.in_adj[v];
    for (int e : adj) {
      if (e == skip_e) continue;
      Vertex w = forward ? g.edges[e].to : g.edges[e].from;
      if (w == skip_v || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      queue.push_back(w);
    }
  }
  return reached;
}

}  // namespace

bool is_strongly_connected_without(const DirectedGraph& g, Vertex skip_vertex,
                                   int skip_edge) {
  int remaining = g.n - (skip_vertex >= 0 ? 1 : 0);
  if (remaining <= 1) return true;
  Vertex root = (skip_vertex == 0) ? 1 : 0;
  std::vector<char> seen;
  if (count_reachable(g, root, true, skip_vertex, skip_edge, seen) != remaining) return false;
  return count_reachable(g, root, false, skip_vertex, skip_edge, seen) == remaining;
}

DominatorTree dominator_tree(const DirectedGraph& g, Vertex root) {
  if (root < 0 || root >= g.n) throw PreconditionError("dominator_tree: root out of range");
  const int n = g.n;

  // DFS preorder with parents.
  std::vector<int> pre(n, -1);        // vertex -> preorder number
  std::vector<Vertex> order;          // preorder number -> vertex
  std::vector<Vertex> parent(n, -1);  // DFS tree parent
  order.reserve(n);
  {
    struct Frame {
      Vertex v;
      size_t next = 0;
    };
    std::vector<Frame> stack;
    stack.push_back({root});
    pre[root] = 0;
    order.push_back(root);
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < g.out_adj[f.v].size()) {
        Vertex w = g.edges[g.out_adj[f.v][f.next++]].to;
        if (pre[w] < 0) {
          pre[w] = static_cast<int>(order.size());
          order.push_back(w);
          parent[w] = f.v;
          stack.push_back({w});
        }
      } else {
        stack.pop_back();
      }
    }
  }
  if (static_cast<int>(order.size()) != n)
    throw PreconditionError("dominator_tree: " +
                            std::to_string(n - static_cast<int>(order.size())) +
                            " vertices unreachable from the root");

  // Semidominators via the link-eval forest with path compression.
  std::vector<int> semi(n);  // vertex -> semidominator as a preorder number
  for (Vertex v = 0; v < n; ++v) semi[v] = pre[v];
  std::vector<Vertex> ancestor(n, -1);
  std::vector<Vertex> best(n);  // vertex on the path with minimal semi
  for (Vertex v = 0; v < n; ++v) best[v] = v;

  std::vector<Vertex> compress_path;
  auto eval = [&](Vertex v) -> Vertex {
    if (ancestor[v] < 0) return v;
    compress_path.clear();
    Vertex x = v;
    while (ancestor[ancestor[x]] >= 0) {
      compress_path.push_back(x);
      x = ancestor[x];
    }
    // Walk back down, pointing everything at the forest root and keeping the
    // minimal-semi vertex seen along the way.
    for (auto it = compress_path.rbegin(); it != compress_path.rend(); ++it) {
      Vertex y = *it;
      if (semi[best[ancestor[y]]] < semi[best[y]]) best[y] = best[ancestor[y]];
      ancestor[y] = ancestor[x];
    }
    return best[v];
  };

  for (int i = n - 1; i >= 1; --i) {
    Vertex w = order[i];
    for (int e : g.in_adj[w]) {
      Vertex u = g.edges[e].from;
      int s = (pre[u] <= pre[w]) ? pre[u] : semi[eval(u)];
      semi[w] = std::min(semi[w], s);
    }
    ancestor[w] = parent[w];
  }

  // Semi-NCA: idom[w] is the NCA of parent[w] and semi[w] in the tree built
  // so far; found by walking idom links upward from the DFS parent.
  DominatorTree t;
  t.root = root;
  t.idom.assign(n, -1);
  t.idom[root] = root;
  for (int i = 1; i < n; ++i) {
    Vertex w = order[i];
    Vertex x = parent[w];
    while (pre[x] > semi[w]) x = t.idom[x];
    t.idom[w] = x;
  }
  t.children.assign(n, {});
  for (int i = 1; i < n; ++i) {
    Vertex w = order[i];
    t.children[t.idom[w]].push_back(w);
  }
  for (auto& c : t.children) std::sort(c.begin(), c.end());
  return t;
}

VertexSet nontrivial_dominators(const DominatorTree& t) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(t.children.size()); ++v)
    if (v != t.root && !t.children[v].empty()) out.push_back(v);
  return VertexSet(std::move(out));
}

VertexSet nontrivial_dominators(const DirectedGraph& g, Vertex root) {
  return nontrivial_dominators(dominator_tree(g, root));
}

VertexSet strong_articulation_points(const DirectedGraph& g) {
  if (g.n < 3) throw PreconditionError("strong_articulation_points: need n >= 3");
  if (!is_strongly_connected(g))
    throw PreconditionError("strong_articulation_points: graph is not strongly connected");
  const Vertex w = 0;
  std::vector<Vertex> b;
  if (!is_strongly_connected_without(g, w, -1)) b.push_back(w);
  for (Vertex v : nontrivial_dominators(g, w)) b.push_back(v);
  for (Vertex v : nontrivial_dominators(reverse(g), w)) b.push_back(v);
  return VertexSet(std::move(b));
}

EdgeSet strong_bridges(const DirectedGraph& g) {
  if (!is_strongly_connected(g))
    throw PreconditionError("strong_bridges: graph is not strongly connected");
  if (g.n <= 1) return {};
  const Vertex w = 0;
  DominatorTree fwd = dominator_tree(g, w);
  DominatorTree rev = dominator_tree(reverse(g), w);

  // An edge can only be a strong bridge if it is a dominator-tree edge of
  // the forward flowgraph or of the reverse one.
  std::vector<int> candidates;
  for (Vertex v = 0; v < g.n; ++v) {
    if (v == w) continue;
    int e = g.find_edge(fwd.idom[v], v);
    if (e >= 0) candidates.push_back(e);
    e = g.find_edge(v, rev.idom[v]);
    if (e >= 0) candidates.push_back(e);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<int> bridges;
  for (int e : candidates)
    if (!is_strongly_connected_without(g, -1, e)) bridges.push_back(e);
  return EdgeSet(std::move(bridges));
}

StrongCutReport strong_cut_report(const DirectedGraph& g) {
  StrongCutReport r;
  r.saps = strong_articulation_points(g);
  r.sbridges = strong_bridges(g);
  r.s_tap_count = r.saps.size();
  r.s_tb_count = r.sbridges.size();
  return r;
}

bool is_two_vertex_connected(const DirectedGraph& g) {
  if (g.n < 3) return false;
  if (!is_strongly_connected(g)) return false;
  return strong_articulation_points(g).empty();
}

}  // namespace twinless
