#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twinless/graph.hpp"
#include "twinless/mtscss.hpp"

namespace twinless {

// Machine-readable result document with a stable field order. Identical
// (input, command, seed) triples produce byte-identical text and JSON;
// wall-clock timing is therefore opt-in and off by default.
class Report {
 public:
  void add_scalar(const std::string& key, const std::string& value);
  void add_scalar(const std::string& key, long long value);
  void add_flag(const std::string& key, bool value);
  void add_int_list(const std::string& key, const std::vector<int>& values);
  void add_pair_list(const std::string& key, const std::vector<std::pair<int, int>>& pairs);
  void add_nested_list(const std::string& key, const std::vector<std::vector<int>>& lists);
  void add_trace(const std::string& key, const DirectedGraph& g,
                 const std::vector<IterationRecord>& trace);

  std::string to_text() const;
  std::string to_json() const;

  // 1-based, ascending views of result sets.
  static std::vector<int> vertices_1based(const VertexSet& s);
  static std::vector<std::pair<int, int>> edges_1based(const DirectedGraph& g, const EdgeSet& s);

 private:
  struct Field {
    enum Kind { kScalar, kInt, kBool, kIntList, kPairList, kNestedList, kTrace } kind;
    std::string key;
    std::string text;
    long long number = 0;
    bool flag = false;
    std::vector<int> ints;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> nested;
    struct TraceRow {
      std::pair<int, int> added;
      std::vector<std::pair<int, int>> removed;
      int before = 0;
      int after = 0;
    };
    std::vector<TraceRow> trace;
  };
  std::vector<Field> fields_;
};

}  // namespace twinless
