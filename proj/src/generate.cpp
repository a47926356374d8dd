#include "twinless/generate.hpp"

#include <unordered_set>

#include "twinless/errors.hpp"
#include "twinless/tscc.hpp"

namespace twinless {

uint64_t Rng::below(uint64_t bound) {
  if (bound == 0) throw InternalError("Rng::below(0)");
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

DirectedGraph gen_cycle(int n) {
  if (n < 1) throw InputError("gen cycle: need n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (n >= 2)
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return build_graph(n, edges);
}

namespace {

uint64_t pair_key(int n, Vertex u, Vertex v) {
  return static_cast<uint64_t>(u) * n + v;
}

}  // namespace

DirectedGraph gen_random_sc(int n, int m, uint64_t seed) {
  if (n < 1) throw InputError("gen random-sc: need n >= 1");
  if (n == 1) {
    if (m != 0) throw InputError("gen random-sc: a 1-vertex graph has no edges");
    return build_graph(1, {});
  }
  if (m < n) throw InputError("gen random-sc: need m >= n for strong connectivity");
  if (static_cast<long long>(m) > static_cast<long long>(n) * (n - 1))
    throw InputError("gen random-sc: m exceeds n(n-1)");

  Rng rng(seed);
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.below(static_cast<uint64_t>(i) + 1)]);

  std::vector<std::pair<Vertex, Vertex>> edges;
  std::unordered_set<uint64_t> present;
  edges.reserve(m);
  for (int i = 0; i < n; ++i) {
    Vertex u = perm[i], v = perm[(i + 1) % n];
    edges.push_back({u, v});
    present.insert(pair_key(n, u, v));
  }
  while (static_cast<int>(edges.size()) < m) {
    Vertex u = static_cast<Vertex>(rng.below(n));
    Vertex v = static_cast<Vertex>(rng.below(n));
    if (u == v || present.count(pair_key(n, u, v))) continue;
    edges.push_back({u, v});
    present.insert(pair_key(n, u, v));
  }
  return build_graph(n, edges);
}

DirectedGraph gen_random_tsc(int n, int m, uint64_t seed) {
  if (n == 2) throw InputError("gen random-tsc: no 2-vertex graph is twinless strongly connected");
  DirectedGraph g = gen_random_sc(n, m, seed);
  if (n <= 1) return g;

  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  while (true) {
    ComponentLabeling labels = tsccs(g);
    if (labels.count == 1) return g;
    // A fresh arc between different TSCCs (whose twin is absent) shrinks the
    // condensation tree; such an arc always exists for n >= 3.
    while (true) {
      Vertex u = static_cast<Vertex>(rng.below(n));
      Vertex v = static_cast<Vertex>(rng.below(n));
      if (u == v || labels.label[u] == labels.label[v]) continue;
      if (g.has_edge(u, v) || g.has_edge(v, u)) continue;
      std::vector<std::pair<Vertex, Vertex>> edges;
      edges.reserve(g.edges.size() + 1);
      for (const Edge& e : g.edges) edges.push_back({e.from, e.to});
      edges.push_back({u, v});
      g = build_graph(n, edges);
      break;
    }
  }
}

}  // namespace twinless
