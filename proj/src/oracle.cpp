#include "twinless/oracle.hpp"

#include <algorithm>
#include <string>

#include "twinless/errors.hpp"
#include "twinless/strong.hpp"

namespace twinless {

namespace {

// Antiparallel pairs as (edge id of (u,v), edge id of (v,u)) with u < v.
std::vector<std::pair<int, int>> antiparallel_pairs(const DirectedGraph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < g.edge_count(); ++e) {
    Vertex u = g.edges[e].from, v = g.edges[e].to;
    if (u < v) {
      int twin = g.find_edge(v, u);
      if (twin >= 0) pairs.push_back({e, twin});
    }
  }
  return pairs;
}

DirectedGraph from_edge_ids(const DirectedGraph& g, const std::vector<int>& ids) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(ids.size());
  for (int e : ids) pairs.push_back({g.edges[e].from, g.edges[e].to});
  return build_graph(g.n, pairs);
}

void check_pair_budget(size_t k, const OracleBudget& budget, const char* who) {
  // 2^k orientation subgraphs; cap well below the shift width no matter how
  // generous the caller's budget is.
  int limit = std::min(budget.max_antiparallel_pairs, 30);
  if (static_cast<int>(k) > limit)
    throw PreconditionError(std::string(who) + ": " + std::to_string(k) +
                            " antiparallel pairs exceed the oracle budget of " +
                            std::to_string(limit));
}

void check_n_budget(int n, const OracleBudget& budget, const char* who) {
  int limit = std::min(budget.max_n, 24);
  if (n > limit)
    throw PreconditionError(std::string(who) + ": n=" + std::to_string(n) +
                            " exceeds the oracle budget of " + std::to_string(limit));
}

// Calls fn(subgraph) for every way of keeping exactly one arc per
// antiparallel pair (all unpaired arcs stay). Dropping both arcs of a pair
// is dominated, so those subgraphs are never generated. Stops early when fn
// returns true.
template <typename Fn>
bool any_orientation(const DirectedGraph& g, const std::vector<std::pair<int, int>>& pairs,
                     Fn&& fn) {
  std::vector<int> base;
  std::vector<char> paired(g.edge_count(), 0);
  for (auto [a, b] : pairs) paired[a] = paired[b] = 1;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!paired[e]) base.push_back(e);

  const size_t k = pairs.size();
  std::vector<int> ids;
  for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
    ids = base;
    for (size_t i = 0; i < k; ++i)
      ids.push_back((mask >> i) & 1 ? pairs[i].second : pairs[i].first);
    if (fn(from_edge_ids(g, ids))) return true;
  }
  return false;
}

}  // namespace

bool oracle_is_tsc(const DirectedGraph& g, const OracleBudget& budget) {
  if (g.n <= 1) return true;
  if (!is_strongly_connected(g)) return false;
  auto pairs = antiparallel_pairs(g);
  check_pair_budget(pairs.size(), budget, "oracle_is_tsc");
  return any_orientation(g, pairs,
                         [](const DirectedGraph& sub) { return is_strongly_connected(sub); });
}

ComponentLabeling oracle_tscc_relation(const DirectedGraph& g, const OracleBudget& budget) {
  check_n_budget(g.n, budget, "oracle_tscc_relation");
  auto pairs = antiparallel_pairs(g);
  check_pair_budget(pairs.size(), budget, "oracle_tscc_relation");

  std::vector<std::vector<char>> related(g.n, std::vector<char>(g.n, 0));
  for (Vertex v = 0; v < g.n; ++v) related[v][v] = 1;
  any_orientation(g, pairs, [&](const DirectedGraph& sub) {
    ComponentLabeling scc = sccs(sub);
    for (Vertex v = 0; v < g.n; ++v)
      for (Vertex w = v + 1; w < g.n; ++w)
        if (scc.label[v] == scc.label[w]) related[v][w] = related[w][v] = 1;
    return false;  // visit every orientation
  });

  for (Vertex x = 0; x < g.n; ++x)
    for (Vertex w = 0; w < g.n; ++w)
      for (Vertex y = 0; y < g.n; ++y)
        if (related[x][w] && related[w][y] && !related[x][y])
          throw InternalError("oracle_tscc_relation: relation is not transitive at (" +
                              std::to_string(x) + "," + std::to_string(w) + "," +
                              std::to_string(y) + ")");

  ComponentLabeling out;
  out.label.assign(g.n, -1);
  int next = 0;
  for (Vertex v = 0; v < g.n; ++v) {
    if (out.label[v] >= 0) continue;
    for (Vertex w = v; w < g.n; ++w)
      if (related[v][w]) out.label[w] = next;
    ++next;
  }
  out.count = next;
  return out;
}

namespace {

// Minimum-size edge subset passing `test`, scanning cardinalities upward.
template <typename Test>
std::optional<int> min_spanning_subset(const DirectedGraph& g, const OracleBudget& budget,
                                       const char* who, Test&& test) {
  const int m = g.edge_count();
  if (m > budget.max_subset_enumeration)
    throw PreconditionError(std::string(who) + ": m=" + std::to_string(m) +
                            " exceeds the oracle budget of " +
                            std::to_string(budget.max_subset_enumeration));
  if (g.n <= 1) return 0;
  if (!test(g)) return std::nullopt;  // even the full edge set fails

  // Any spanning strongly connected subgraph needs in- and out-degree >= 1
  // everywhere, hence at least n edges.
  for (int c = std::min(g.n, m); c <= m; ++c) {
    std::vector<int> pick(c);
    for (int i = 0; i < c; ++i) pick[i] = i;
    while (true) {
      if (test(from_edge_ids(g, pick))) return c;
      // next combination
      int i = c - 1;
      while (i >= 0 && pick[i] == m - c + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < c; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw InternalError(std::string(who) + ": full set passed but enumeration found nothing");
}

}  // namespace

std::optional<int> oracle_min_scss(const DirectedGraph& g, const OracleBudget& budget) {
  return min_spanning_subset(g, budget, "oracle_min_scss",
                             [](const DirectedGraph& sub) { return is_strongly_connected(sub); });
}

std::optional<int> oracle_min_tscss(const DirectedGraph& g, const OracleBudget& budget) {
  return min_spanning_subset(g, budget, "oracle_min_tscss", [&budget](const DirectedGraph& sub) {
    return oracle_is_tsc(sub, budget);
  });
}

OracleCuts oracle_cuts(const DirectedGraph& g, const OracleBudget& budget) {
  check_n_budget(g.n, budget, "oracle_cuts");
  OracleCuts cuts;
  std::vector<int> taps, saps, tbridges, sbridges;
  for (Vertex v = 0; v < g.n; ++v) {
    DirectedGraph sub = remove_vertex(g, v).graph;
    if (!oracle_is_tsc(sub, budget)) taps.push_back(v);
    if (!is_strongly_connected(sub)) saps.push_back(v);
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    DirectedGraph sub = remove_edge(g, e);
    if (!oracle_is_tsc(sub, budget)) tbridges.push_back(e);
    if (!is_strongly_connected(sub)) sbridges.push_back(e);
  }
  cuts.taps = VertexSet(std::move(taps));
  cuts.saps = VertexSet(std::move(saps));
  cuts.tbridges = EdgeSet(std::move(tbridges));
  cuts.sbridges = EdgeSet(std::move(sbridges));
  return cuts;
}

namespace {

template <typename Pred>
std::vector<VertexSet> maximal_subsets(const DirectedGraph& g, const OracleBudget& budget,
                                       const char* who, Pred&& qualifies) {
  check_n_budget(g.n, budget, who);
  std::vector<std::vector<Vertex>> hits;
  for (uint32_t mask = 0; mask < (uint32_t{1} << g.n); ++mask) {
    std::vector<Vertex> verts;
    for (Vertex v = 0; v < g.n; ++v)
      if ((mask >> v) & 1) verts.push_back(v);
    if (static_cast<int>(verts.size()) < 3) continue;
    if (qualifies(verts)) hits.push_back(verts);
  }
  std::vector<VertexSet> out;
  for (size_t i = 0; i < hits.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < hits.size() && maximal; ++j)
      if (i != j && hits[j].size() > hits[i].size() &&
          std::includes(hits[j].begin(), hits[j].end(), hits[i].begin(), hits[i].end()))
        maximal = false;
    if (maximal) out.push_back(VertexSet(hits[i]));
  }
  return out;
}

}  // namespace

std::vector<VertexSet> oracle_2vtcc(const DirectedGraph& g, const OracleBudget& budget) {
  return maximal_subsets(g, budget, "oracle_2vtcc", [&](const std::vector<Vertex>& verts) {
    InducedSubgraph sub = induced_subgraph(g, VertexSet(verts));
    if (!oracle_is_tsc(sub.graph, budget)) return false;
    for (Vertex v = 0; v < sub.graph.n; ++v)
      if (!oracle_is_tsc(remove_vertex(sub.graph, v).graph, budget)) return false;
    return true;
  });
}

std::vector<VertexSet> oracle_2vcc(const DirectedGraph& g, const OracleBudget& budget) {
  return maximal_subsets(g, budget, "oracle_2vcc", [&](const std::vector<Vertex>& verts) {
    InducedSubgraph sub = induced_subgraph(g, VertexSet(verts));
    if (!is_strongly_connected(sub.graph)) return false;
    for (Vertex v = 0; v < sub.graph.n; ++v)
      if (!is_strongly_connected(remove_vertex(sub.graph, v).graph)) return false;
    return true;
  });
}

}  // namespace twinless
