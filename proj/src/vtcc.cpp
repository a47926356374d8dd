#include "twinless/vtcc.hpp"

#include <algorithm>

#include "twinless/cuts.hpp"
#include "twinless/errors.hpp"
#include "twinless/strong.hpp"
#include "twinless/tscc.hpp"

namespace twinless {

bool is_two_vertex_twinless_connected(const DirectedGraph& g) {
  if (g.n < 3) return false;
  if (!is_twinless_strongly_connected(g)) return false;
  return twinless_articulation_points(g).taps.empty();
}

Vtcc2Report collect_and_dedup(const std::vector<VertexSet>& candidates) {
  Vtcc2Report report;
  std::vector<std::vector<int>> sets;
  for (const VertexSet& c : candidates) sets.push_back(c.ids());
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (size_t i = 0; i < sets.size(); ++i) {
    bool covered = false;
    for (size_t j = 0; j < sets.size() && !covered; ++j)
      if (i != j && sets[j].size() > sets[i].size() &&
          std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end()))
        covered = true;
    if (!covered) report.components.push_back(VertexSet(sets[i]));
  }
  return report;
}

namespace {

struct Recursion {
  std::vector<VertexSet> found;
  int max_depth = 0;
  int subproblems = 0;

  // g is an induced subgraph; to_orig maps its vertices to the top-level ids.
  void solve(const DirectedGraph& g, const std::vector<Vertex>& to_orig, int depth) {
    ++subproblems;
    max_depth = std::max(max_depth, depth);
    if (g.n < 3) return;
    // Recursion only ever descends into TSCCs (which induce twinless
    // strongly connected subgraphs) or groups verified to be TSC.
    if (!is_twinless_strongly_connected(g))
      throw InternalError("2vtcc recursion: subproblem is not twinless strongly connected");

    TwinlessCutReport cuts = twinless_articulation_points(g);
    if (cuts.taps.empty()) {
      std::vector<Vertex> orig(to_orig.begin(), to_orig.end());
      found.push_back(VertexSet(std::move(orig)));
      return;
    }
    VertexSet saps = strong_articulation_points(g);
    if (!saps.empty()) {
      decompose_by_dominators(g, to_orig, saps, depth);
    } else {
      decompose_by_tap(g, to_orig, cuts.taps, depth);
    }
  }

  void recurse_into(const DirectedGraph& g, const std::vector<Vertex>& to_orig,
                    const VertexSet& verts, int depth) {
    if (verts.size() < 3) return;
    if (verts.size() >= static_cast<int>(to_orig.size()))
      throw InternalError("2vtcc recursion: subproblem failed to shrink");
    InducedSubgraph sub = induced_subgraph(g, verts);
    std::vector<Vertex> orig(sub.graph.n);
    for (Vertex v = 0; v < sub.graph.n; ++v) orig[v] = to_orig[sub.to_parent[v]];
    solve(sub.graph, orig, depth + 1);
  }

  // Not 2-vertex-connected: pick a pivot, take the denser of the two
  // dominator trees, and recurse into G[M(w) + w] for every w with at least
  // two tree successors.
  void decompose_by_dominators(const DirectedGraph& g, const std::vector<Vertex>& to_orig,
                               const VertexSet& saps, int depth) {
    Vertex pivot = -1;
    for (Vertex v = 0; v < g.n && pivot < 0; ++v)
      if (!saps.contains(v)) pivot = v;
    if (pivot < 0) pivot = 0;  // every vertex is a strong articulation point

    DominatorTree fwd = dominator_tree(g, pivot);
    DominatorTree rev = dominator_tree(reverse(g), pivot);
    int fwd_ntd = nontrivial_dominators(fwd).size();
    int rev_ntd = nontrivial_dominators(rev).size();
    const DominatorTree& tree = (rev_ntd > fwd_ntd) ? rev : fwd;

    for (Vertex w = 0; w < g.n; ++w) {
      if (tree.children[w].size() < 2) continue;
      std::vector<Vertex> group = tree.children[w];
      group.push_back(w);
      VertexSet group_set(std::move(group));
      InducedSubgraph sub = induced_subgraph(g, group_set);
      if (is_twinless_strongly_connected(sub.graph)) {
        recurse_into(g, to_orig, group_set, depth);
      } else {
        for (const auto& members : tsccs(sub.graph).members()) {
          if (members.size() < 3) continue;
          std::vector<Vertex> in_g;
          for (Vertex v : members) in_g.push_back(sub.to_parent[v]);
          recurse_into(g, to_orig, VertexSet(std::move(in_g)), depth);
        }
      }
    }
  }

  // 2-vertex-connected but not 2VTC: split at a twinless articulation point.
  void decompose_by_tap(const DirectedGraph& g, const std::vector<Vertex>& to_orig,
                        const VertexSet& taps, int depth) {
    Vertex v = taps.ids().front();
    InducedSubgraph without_v = remove_vertex(g, v);
    for (const auto& members : tsccs(without_v.graph).members()) {
      std::vector<Vertex> with_v;
      for (Vertex x : members) with_v.push_back(without_v.to_parent[x]);
      with_v.push_back(v);
      InducedSubgraph part = induced_subgraph(g, VertexSet(std::move(with_v)));
      for (const auto& inner : tsccs(part.graph).members()) {
        if (inner.size() < 3) continue;
        std::vector<Vertex> in_g;
        for (Vertex x : inner) in_g.push_back(part.to_parent[x]);
        recurse_into(g, to_orig, VertexSet(std::move(in_g)), depth);
      }
    }
  }
};

}  // namespace

Vtcc2Report two_vertex_twinless_components(const DirectedGraph& g) {
  if (!is_twinless_strongly_connected(g))
    throw PreconditionError(
        "two_vertex_twinless_components: graph is not twinless strongly connected");

  Recursion rec;
  std::vector<Vertex> identity(g.n);
  for (Vertex v = 0; v < g.n; ++v) identity[v] = v;
  rec.solve(g, identity, 0);

  Vtcc2Report report = collect_and_dedup(rec.found);
  report.recursion_depth = rec.max_depth;
  report.subproblem_count = rec.subproblems;

  // Defensive maximality filter: drop any reported set that still extends by
  // a single vertex.
  std::vector<VertexSet> maximal;
  for (const VertexSet& c : report.components) {
    bool extendable = false;
    for (Vertex x = 0; x < g.n && !extendable; ++x) {
      if (c.contains(x)) continue;
      std::vector<Vertex> bigger = c.ids();
      bigger.push_back(x);
      InducedSubgraph sub = induced_subgraph(g, VertexSet(std::move(bigger)));
      if (is_two_vertex_twinless_connected(sub.graph)) extendable = true;
    }
    if (!extendable) maximal.push_back(c);
  }
  report.components = std::move(maximal);
  return report;
}

}  // namespace twinless
