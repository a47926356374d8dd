#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "twinless/graph.hpp"

namespace twinless {

// Text edge-list document: header line "n m", then m lines "u v" with
// 1-based vertex ids. Lines starting with '#' (and blank lines) are skipped.
struct ParsedEdgeList {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based
};

// Throws InputError with the offending line number on malformed input.
ParsedEdgeList parse_edge_list(std::istream& in);
ParsedEdgeList parse_edge_list(const std::string& text);

DirectedGraph graph_from_edge_list(const ParsedEdgeList& doc, BuildStats* stats = nullptr);

// Canonical form: "n m" then edges in ascending (u,v) order, 1-based.
// Parsing a serialization reproduces the same graph (as an edge set).
std::string serialize_edge_list(const DirectedGraph& g);
std::string serialize_edge_list(const ParsedEdgeList& doc);

// FNV-1a over the canonical serialization; stable input fingerprint for
// report documents.
uint64_t edge_list_hash(const DirectedGraph& g);
std::string hash_hex(uint64_t h);

}  // namespace twinless
