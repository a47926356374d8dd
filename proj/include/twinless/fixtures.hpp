#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "twinless/graph.hpp"

namespace twinless {

// Bundled example graphs (1-based edge lists) used by the docs, the test
// suites, and the `fixtures` CLI subcommand.
struct Fixture {
  std::string name;
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based
};

const std::vector<Fixture>& all_fixtures();

// Throws InputError for unknown names.
const Fixture& fixture(std::string_view name);

DirectedGraph fixture_graph(std::string_view name);

// Convenience for tests: build from 1-based pairs.
DirectedGraph graph_from_1based(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace twinless
