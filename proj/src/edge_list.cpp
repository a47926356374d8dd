#include "twinless/edge_list.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include "twinless/errors.hpp"

namespace twinless {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void fail_at(int line_no, const std::string& why) {
  throw InputError("line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

ParsedEdgeList parse_edge_list(std::istream& in) {
  ParsedEdgeList doc;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long m = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::istringstream fields(line);
    if (!have_header) {
      long long n;
      if (!(fields >> n >> m)) fail_at(line_no, "expected header \"n m\"");
      std::string extra;
      if (fields >> extra) fail_at(line_no, "trailing tokens after header");
      if (n < 0 || m < 0) fail_at(line_no, "negative counts in header");
      if (n > 50'000'000) fail_at(line_no, "vertex count too large");
      doc.n = static_cast<int>(n);
      have_header = true;
      continue;
    }
    long long u, v;
    if (!(fields >> u >> v)) fail_at(line_no, "expected edge \"u v\"");
    std::string extra;
    if (fields >> extra) fail_at(line_no, "trailing tokens after edge");
    if (u < 1 || u > doc.n || v < 1 || v > doc.n)
      fail_at(line_no, "vertex id out of range [1," + std::to_string(doc.n) + "]");
    doc.edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    if (static_cast<long long>(doc.edges.size()) > m)
      fail_at(line_no, "more edges than the header announced");
  }
  if (!have_header) throw InputError("empty input: missing \"n m\" header");
  if (static_cast<long long>(doc.edges.size()) != m)
    throw InputError("header announced " + std::to_string(m) + " edges but " +
                     std::to_string(doc.edges.size()) + " were given");
  return doc;
}

ParsedEdgeList parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

DirectedGraph graph_from_edge_list(const ParsedEdgeList& doc, BuildStats* stats) {
  std::vector<std::pair<Vertex, Vertex>> zero_based;
  zero_based.reserve(doc.edges.size());
  for (auto [u, v] : doc.edges) zero_based.push_back({u - 1, v - 1});
  return build_graph(doc.n, zero_based, stats);
}

std::string serialize_edge_list(const DirectedGraph& g) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edges.size());
  for (const Edge& e : g.edges) pairs.push_back({e.from + 1, e.to + 1});
  std::sort(pairs.begin(), pairs.end());
  std::ostringstream out;
  out << g.n << ' ' << pairs.size() << '\n';
  for (auto [u, v] : pairs) out << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize_edge_list(const ParsedEdgeList& doc) {
  return serialize_edge_list(graph_from_edge_list(doc));
}

uint64_t edge_list_hash(const DirectedGraph& g) {
  const std::string text = serialize_edge_list(g);
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

}  // namespace twinless
