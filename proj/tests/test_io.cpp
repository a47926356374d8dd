#include <doctest.h>

#include <fstream>
#include <sstream>

#include "testutil.hpp"
#include "twinless/edge_list.hpp"
#include "twinless/errors.hpp"
#include "twinless/fixtures.hpp"
#include "twinless/generate.hpp"
#include "twinless/report.hpp"

using namespace twinless;
using namespace twinless::testutil;

TEST_CASE("parse accepts comments and blank lines") {
  ParsedEdgeList doc = parse_edge_list("# a graph\n3 2\n\n1 2\n# middle\n2 3\n");
  CHECK(doc.n == 3);
  CHECK(doc.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
}

TEST_CASE("parse errors carry line numbers") {
  auto message_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message_of("3 1\n1 9\n").find("line 2") == 0);
  CHECK(message_of("oops\n").find("line 1") == 0);
  CHECK(message_of("3 2\n1 2\n") == "header announced 2 edges but 1 were given");
  CHECK(message_of("3 1\n1 2\n2 3\n").find("line 3") == 0);
  CHECK(message_of("") == "empty input: missing \"n m\" header");
  CHECK(message_of("3 1\n1 2 7\n").find("line 2") == 0);
}

TEST_CASE("parser tolerates CRLF and stray spacing") {
  ParsedEdgeList doc = parse_edge_list("3 2\r\n  1   2\r\n2 3\r\n");
  CHECK(doc.n == 3);
  CHECK(doc.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
}

TEST_CASE("serialize lists edges ascending and round-trips") {
  DirectedGraph g = fixture_graph("fig1");
  std::string text = serialize_edge_list(g);
  DirectedGraph again = graph_from_edge_list(parse_edge_list(text));
  CHECK(serialize_edge_list(again) == text);
  CHECK(again.n == g.n);
  CHECK(again.edge_count() == g.edge_count());
  for (const Edge& e : g.edges) CHECK(again.has_edge(e.from, e.to));
}

TEST_CASE("round trip across every fixture and generator output") {
  for (const Fixture& f : all_fixtures()) {
    DirectedGraph g = fixture_graph(f.name);
    CHECK(serialize_edge_list(graph_from_edge_list(parse_edge_list(serialize_edge_list(g)))) ==
          serialize_edge_list(g));
  }
  DirectedGraph r = gen_random_sc(9, 24, 5);
  CHECK(serialize_edge_list(graph_from_edge_list(parse_edge_list(serialize_edge_list(r)))) ==
        serialize_edge_list(r));
}

TEST_CASE("hash is stable across runs and differs across graphs") {
  CHECK(hash_hex(edge_list_hash(fixture_graph("fig1"))) ==
        hash_hex(edge_list_hash(fixture_graph("fig1"))));
  CHECK(edge_list_hash(fixture_graph("fig1")) != edge_list_hash(fixture_graph("fig2")));
}

TEST_CASE("checked-in fixture data files match the embedded tables") {
  for (const Fixture& f : all_fixtures()) {
    std::ifstream in(std::string(TWINLESS_DATA_DIR) + "/" + f.name + ".edges");
    REQUIRE_MESSAGE(in.good(), f.name);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == serialize_edge_list(fixture_graph(f.name)));
  }
}

TEST_CASE("report rendering is stable in both formats") {
  Report r;
  r.add_scalar("command", std::string("demo"));
  r.add_scalar("count", 2LL);
  r.add_flag("ok", true);
  r.add_int_list("verts", {1, 2, 3});
  r.add_pair_list("pairs", {{1, 2}, {3, 4}});
  r.add_nested_list("groups", {{1, 2}, {3}});
  CHECK(r.to_text() ==
        "command: demo\n"
        "count: 2\n"
        "ok: true\n"
        "verts: 1 2 3\n"
        "pairs: (1,2) (3,4)\n"
        "groups: 2\n"
        "  1: 1 2\n"
        "  2: 3\n");
  CHECK(r.to_json() ==
        "{\n"
        "  \"command\": \"demo\",\n"
        "  \"count\": 2,\n"
        "  \"ok\": true,\n"
        "  \"verts\": [\n    1,\n    2,\n    3\n  ],\n"
        "  \"pairs\": [\n    [\n      1,\n      2\n    ],\n    [\n      3,\n      4\n    ]\n  ],\n"
        "  \"groups\": [\n    [\n      1,\n      2\n    ],\n    [\n      3\n    ]\n  ]\n"
        "}\n");
}
