#include "twinless/fixtures.hpp"

#include "twinless/errors.hpp"

namespace twinless {

const std::vector<Fixture>& all_fixtures() {
  static const std::vector<Fixture> fixtures = {
      // 10 vertices, strongly connected; one 2VCC, two 2VTCCs, strong
      // articulation points {6,9}, twinless articulation points {3,4,6,9,10}.
      {"fig1",
       10,
       {{1, 2},  {2, 1}, {1, 3},  {3, 5},  {2, 3}, {3, 2}, {3, 4}, {4, 3},
        {4, 5},  {5, 4}, {1, 5},  {2, 5},  {5, 1}, {4, 1}, {2, 4}, {6, 4},
        {4, 9},  {9, 6}, {6, 9},  {10, 6}, {10, 9}, {8, 3}, {3, 8}, {8, 10},
        {10, 8}, {9, 7}, {7, 6},  {10, 4}, {4, 10}, {6, 10}, {9, 4}}},
      // 6 vertices, 2-vertex-connected and 2-vertex-twinless-connected.
      {"fig2",
       6,
       {{1, 2}, {2, 1}, {1, 5}, {5, 3}, {2, 5}, {5, 2}, {3, 4}, {4, 5}, {4, 3}, {1, 3},
        {2, 3}, {3, 1}, {4, 1}, {2, 4}, {6, 4}, {4, 6}, {6, 3}, {3, 6}, {5, 4}, {5, 6}}},
      // 14 vertices, twinless strongly connected.
      {"fig3a",
       14,
       {{1, 2},   {2, 3},   {3, 10}, {10, 9},  {9, 1},  {5, 4},  {6, 7},  {7, 8},  {7, 9},
        {9, 7},   {3, 5},   {8, 5},  {4, 6},   {1, 9},  {6, 4},  {7, 6},  {1, 14}, {14, 13},
        {13, 12}, {12, 11}, {11, 2}, {2, 1},   {2, 11}, {11, 14}, {12, 14}}},
      // Strongly connected subgraph of fig3a with three TSCCs.
      {"fig3b",
       14,
       {{1, 2},   {2, 3},   {3, 10}, {10, 9}, {9, 1},  {5, 4},  {6, 7},  {7, 8},  {7, 9},
        {9, 7},   {8, 5},   {1, 9},  {6, 4},  {4, 6},  {14, 13}, {13, 12}, {12, 11}, {11, 2},
        {2, 11},  {11, 14}}},
      // fig3b plus the arc (3,5): two TSCCs.
      {"fig3c",
       14,
       {{1, 2},  {2, 3},  {3, 10},  {10, 9},  {9, 1},   {5, 4},  {6, 7},  {7, 8},  {7, 9},
        {9, 7},  {8, 5},  {1, 9},   {6, 4},   {4, 6},   {14, 13}, {13, 12}, {12, 11}, {11, 2},
        {2, 11}, {11, 14}, {3, 5}}},
      // 10 vertices, twinless strongly connected; minimum strongly connected
      // and minimum twinless strongly connected spanning subgraphs both have
      // 12 edges.
      {"fig4a",
       10,
       {{1, 2}, {2, 3}, {3, 10}, {10, 9}, {9, 1}, {5, 4}, {6, 7}, {7, 8},
        {7, 9}, {9, 7}, {3, 5},  {8, 5},  {4, 6}, {1, 9}, {6, 4}, {7, 6}}},
      // A 12-edge strongly connected spanning subgraph of fig4a that is not
      // twinless strongly connected.
      {"fig4b",
       10,
       {{1, 2}, {2, 3}, {3, 10}, {10, 9}, {9, 1}, {5, 4}, {6, 7}, {7, 8}, {7, 9}, {9, 7},
        {8, 5}, {4, 6}}},
      // A 12-edge twinless strongly connected spanning subgraph of fig4a.
      {"fig4c",
       10,
       {{1, 2}, {2, 3}, {3, 10}, {10, 9}, {9, 1}, {5, 4}, {6, 7}, {7, 8}, {7, 9}, {3, 5},
        {8, 5}, {4, 6}}},
      // fig2 minus the arc (5,6): 2-vertex-connected, not
      // 2-vertex-twinless-connected; vertex 4 is a twinless articulation
      // point; one 2VTCC {1,2,3,4,5}.
      {"fig5",
       6,
       {{1, 2}, {2, 1}, {1, 5}, {5, 3}, {2, 5}, {5, 2}, {3, 4}, {4, 5}, {4, 3}, {1, 3},
        {2, 3}, {3, 1}, {4, 1}, {2, 4}, {6, 4}, {4, 6}, {6, 3}, {3, 6}, {5, 4}}},
  };
  return fixtures;
}

const Fixture& fixture(std::string_view name) {
  for (const Fixture& f : all_fixtures())
    if (f.name == name) return f;
  throw InputError("unknown fixture: " + std::string(name));
}

DirectedGraph graph_from_1based(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<Vertex, Vertex>> zero_based;
  zero_based.reserve(edges.size());
  for (auto [u, v] : edges) zero_based.push_back({u - 1, v - 1});
  return build_graph(n, zero_based);
}

DirectedGraph fixture_graph(std::string_view name) {
  const Fixture& f = fixture(name);
  return graph_from_1based(f.n, f.edges);
}

}  // namespace twinless
