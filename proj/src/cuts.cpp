#include "twinless/cuts.hpp"

#include <algorithm>

#include "twinless/errors.hpp"
#include "twinless/mtscss.hpp"
#include "twinless/strong.hpp"
#include "twinless/tscc.hpp"
#include "twinless/undirected.hpp"

namespace twinless {

TwinlessCutReport twinless_articulation_points(const DirectedGraph& g) {
  if (g.n < 3) throw PreconditionError("twinless_articulation_points: need n >= 3");
  if (!is_twinless_strongly_connected(g))
    throw PreconditionError(
        "twinless_articulation_points: graph is not twinless strongly connected");

  TwinlessCutReport report;
  report.method = "sap-seeded";
  VertexSet saps = strong_articulation_points(g);
  report.seed_count = saps.size();

  UnderlyingGraph u = underlying_graph(g);
  std::vector<Vertex> taps(saps.begin(), saps.end());
  for (Vertex x = 0; x < g.n; ++x) {
    if (saps.contains(x)) continue;
    ++report.tested_count;
    // x is not a strong articulation point, so G - x stays strongly
    // connected and the twinless test reduces to 2-edge-connectivity.
    if (!is_two_edge_connected_without(u, x, -1)) taps.push_back(x);
  }
  report.taps = VertexSet(std::move(taps));
  return report;
}

namespace {

// Shared tail of both bridge algorithms: given the strong bridges and a
// candidate list, keep candidates whose removal breaks 2-edge-connectivity
// of the underlying graph. Candidates must not be strong bridges.
EdgeSet confirm_twinless_bridges(const DirectedGraph& g, const UnderlyingGraph& u,
                                 const EdgeSet& sbridges, const std::vector<int>& candidates,
                                 int* tested) {
  std::vector<int> out(sbridges.begin(), sbridges.end());
  for (int e : candidates) {
    ++*tested;
    int ue = u.find_uedge(g.edges[e].from, g.edges[e].to);
    if (u.uedges[ue].origin_count() == 2) continue;  // twin keeps the uedge alive
    if (!is_two_edge_connected_without(u, -1, ue)) out.push_back(e);
  }
  return EdgeSet(std::move(out));
}

}  // namespace

TwinlessCutReport twinless_bridges_basic(const DirectedGraph& g) {
  if (!is_strongly_connected(g))
    throw PreconditionError("twinless_bridges_basic: graph is not strongly connected");

  TwinlessCutReport report;
  report.method = "basic";
  UnderlyingGraph u = underlying_graph(g);
  if (g.n > 1 && !is_two_edge_connected(u)) {
    // Strongly connected but not twinless strongly connected: removing any
    // edge leaves a non-TSC subgraph, so the definitional set is all edges.
    report.degraded_non_tsc_input = true;
    std::vector<int> all(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) all[e] = e;
    report.tbridges = EdgeSet(std::move(all));
    return report;
  }

  EdgeSet sbridges = strong_bridges(g);
  report.seed_count = sbridges.size();
  std::vector<int> candidates;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!sbridges.contains(e)) candidates.push_back(e);
  report.tbridges = confirm_twinless_bridges(g, u, sbridges, candidates, &report.tested_count);
  return report;
}

TwinlessCutReport twinless_bridges_sparse(const DirectedGraph& g) {
  if (!is_twinless_strongly_connected(g))
    throw PreconditionError("twinless_bridges_sparse: graph is not twinless strongly connected");

  TwinlessCutReport report;
  report.method = "sparse-certificate";
  EdgeSet sbridges = strong_bridges(g);
  report.seed_count = sbridges.size();

  EdgeSet certificate = mtscss_3approx(g).edges;
  for (int e : sbridges)
    if (!certificate.contains(e))
      throw InternalError("twinless_bridges_sparse: strong bridge missing from the certificate");

  UnderlyingGraph u = underlying_graph(g);
  std::vector<int> candidates;
  for (int e : certificate)
    if (!sbridges.contains(e)) candidates.push_back(e);
  report.tbridges = confirm_twinless_bridges(g, u, sbridges, candidates, &report.tested_count);
  return report;
}

bool is_two_edge_twinless_connected(const DirectedGraph& g) {
  if (g.n <= 2) return false;
  if (!is_twinless_strongly_connected(g)) return false;
  return twinless_bridges_basic(g).tbridges.empty();
}

}  // namespace twinless
