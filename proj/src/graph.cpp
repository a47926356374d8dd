#include "twinless/graph.hpp"

#include <algorithm>
#include <string>

#include "twinless/errors.hpp"

namespace twinless {

IdSet::IdSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool IdSet::contains(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

namespace {

void finalize(DirectedGraph& g, bool build_index) {
  g.out_adj.assign(g.n, {});
  g.in_adj.assign(g.n, {});
  for (int e = 0; e < g.edge_count(); ++e) {
    g.out_adj[g.edges[e].from].push_back(e);
    g.in_adj[g.edges[e].to].push_back(e);
  }
  if (build_index) {
    g.by_endpoint_.resize(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i) g.by_endpoint_[i] = static_cast<int32_t>(i);
    std::sort(g.by_endpoint_.begin(), g.by_endpoint_.end(), [&g](int32_t x, int32_t y) {
      const Edge& a = g.edges[x];
      const Edge& b = g.edges[y];
      return a.from != b.from ? a.from < b.from : a.to < b.to;
    });
  }
}

}  // namespace

int DirectedGraph::find_edge(Vertex u, Vertex v) const {
  if (!has_lookup_index())
    throw InternalError("find_edge called on a graph built without a lookup index");
  auto it = std::lower_bound(by_endpoint_.begin(), by_endpoint_.end(), Edge{u, v},
                             [this](int32_t id, const Edge& key) {
                               const Edge& e = edges[id];
                               return e.from != key.from ? e.from < key.from : e.to < key.to;
                             });
  if (it == by_endpoint_.end()) return -1;
  const Edge& e = edges[*it];
  return (e.from == u && e.to == v) ? *it : -1;
}

DirectedGraph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs,
                          BuildStats* stats) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  DirectedGraph g;
  g.n = n;
  BuildStats local;
  std::vector<std::pair<Vertex, Vertex>> seen;
  seen.reserve(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge " + std::to_string(i + 1) + ": vertex id out of range [1," +
                       std::to_string(n) + "]: (" + std::to_string(u + 1) + "," +
                       std::to_string(v + 1) + ")");
    if (u == v) {
      ++local.self_loops_dropped;
      continue;
    }
    seen.push_back({u, v});
  }
  std::vector<std::pair<Vertex, Vertex>> sorted = seen;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  local.duplicates_dropped = static_cast<int>(seen.size() - sorted.size());

  // Edge ids follow first occurrence in the normalized input.
  std::vector<char> taken(sorted.size(), 0);
  g.edges.reserve(sorted.size());
  for (const auto& p : seen) {
    size_t pos = std::lower_bound(sorted.begin(), sorted.end(), p) - sorted.begin();
    if (!taken[pos]) {
      taken[pos] = 1;
      g.edges.push_back({p.first, p.second});
    }
  }
  finalize(g, true);
  if (stats) *stats = local;
  return g;
}

DirectedGraph reverse(const DirectedGraph& g) {
  DirectedGraph r;
  r.n = g.n;
  r.edges.reserve(g.edges.size());
  for (const Edge& e : g.edges) r.edges.push_back({e.to, e.from});
  finalize(r, g.has_lookup_index());
  return r;
}

InducedSubgraph induced_subgraph(const DirectedGraph& g, const VertexSet& keep) {
  for (Vertex v : keep)
    if (v < 0 || v >= g.n) throw InputError("induced_subgraph: vertex out of range");
  std::vector<int> to_sub(g.n, -1);
  InducedSubgraph sub;
  sub.to_parent.assign(keep.begin(), keep.end());
  for (int i = 0; i < static_cast<int>(sub.to_parent.size()); ++i) to_sub[sub.to_parent[i]] = i;
  sub.graph.n = static_cast<int>(sub.to_parent.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    Vertex u = g.edges[e].from, v = g.edges[e].to;
    if (to_sub[u] >= 0 && to_sub[v] >= 0) {
      sub.graph.edges.push_back({to_sub[u], to_sub[v]});
      sub.edge_to_parent.push_back(e);
    }
  }
  finalize(sub.graph, true);
  return sub;
}

InducedSubgraph remove_vertex(const DirectedGraph& g, Vertex v) {
  std::vector<int> keep;
  keep.reserve(g.n - 1);
  for (Vertex x = 0; x < g.n; ++x)
    if (x != v) keep.push_back(x);
  return induced_subgraph(g, VertexSet(std::move(keep)));
}

DirectedGraph remove_edge(const DirectedGraph& g, int edge_id) {
  DirectedGraph h;
  h.n = g.n;
  h.edges.reserve(g.edges.size() - 1);
  for (int e = 0; e < g.edge_count(); ++e)
    if (e != edge_id) h.edges.push_back(g.edges[e]);
  finalize(h, true);
  return h;
}

int UnderlyingGraph::find_uedge(Vertex x, Vertex y) const {
  if (x > y) std::swap(x, y);
  for (int id : adj[x]) {
    if (uedges[id].a == x && uedges[id].b == y) return id;
  }
  return -1;
}

UnderlyingGraph underlying_graph(const DirectedGraph& g) {
  struct Rec {
    Vertex a, b;
    int edge_id;
    bool forward;  // arc runs a->b
  };
  std::vector<Rec> recs;
  recs.reserve(g.edges.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    Vertex u = g.edges[e].from, v = g.edges[e].to;
    recs.push_back(u < v ? Rec{u, v, e, true} : Rec{v, u, e, false});
  }
  std::sort(recs.begin(), recs.end(), [](const Rec& x, const Rec& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });

  UnderlyingGraph u;
  u.n = g.n;
  u.adj.assign(g.n, {});
  for (size_t i = 0; i < recs.size();) {
    size_t j = i;
    UEdge ue{recs[i].a, recs[i].b, -1, -1};
    while (j < recs.size() && recs[j].a == ue.a && recs[j].b == ue.b) {
      (recs[j].forward ? ue.fwd_edge : ue.rev_edge) = recs[j].edge_id;
      ++j;
    }
    int id = u.uedge_count();
    u.uedges.push_back(ue);
    u.adj[ue.a].push_back(id);
    u.adj[ue.b].push_back(id);
    i = j;
  }
  return u;
}

std::vector<std::vector<Vertex>> ComponentLabeling::members() const {
  std::vector<std::vector<Vertex>> out(count);
  for (Vertex v = 0; v < static_cast<Vertex>(label.size()); ++v) out[label[v]].push_back(v);
  return out;
}

void ComponentLabeling::normalize() {
  std::vector<int> remap(count, -1);
  int next = 0;
  for (int l : label) {
    if (l >= 0 && remap[l] < 0) remap[l] = next++;
  }
  for (int& l : label) l = remap[l];
  count = next;
}

}  // namespace twinless
