#include "twinless/report.hpp"

#include <json.hpp>
#include <sstream>

namespace twinless {

void Report::add_scalar(const std::string& key, const std::string& value) {
  Field f;
  f.kind = Field::kScalar;
  f.key = key;
  f.text = value;
  fields_.push_back(std::move(f));
}

void Report::add_scalar(const std::string& key, long long value) {
  Field f;
  f.kind = Field::kInt;
  f.key = key;
  f.number = value;
  fields_.push_back(std::move(f));
}

void Report::add_flag(const std::string& key, bool value) {
  Field f;
  f.kind = Field::kBool;
  f.key = key;
  f.flag = value;
  fields_.push_back(std::move(f));
}

void Report::add_int_list(const std::string& key, const std::vector<int>& values) {
  Field f;
  f.kind = Field::kIntList;
  f.key = key;
  f.ints = values;
  fields_.push_back(std::move(f));
}

void Report::add_pair_list(const std::string& key,
                           const std::vector<std::pair<int, int>>& pairs) {
  Field f;
  f.kind = Field::kPairList;
  f.key = key;
  f.pairs = pairs;
  fields_.push_back(std::move(f));
}

void Report::add_nested_list(const std::string& key,
                             const std::vector<std::vector<int>>& lists) {
  Field f;
  f.kind = Field::kNestedList;
  f.key = key;
  f.nested = lists;
  fields_.push_back(std::move(f));
}

void Report::add_trace(const std::string& key, const DirectedGraph& g,
                       const std::vector<IterationRecord>& trace) {
  Field f;
  f.kind = Field::kTrace;
  f.key = key;
  for (const IterationRecord& rec : trace) {
    Field::TraceRow row;
    row.added = {g.edges[rec.edge_added].from + 1, g.edges[rec.edge_added].to + 1};
    for (int e : rec.edges_removed)
      row.removed.push_back({g.edges[e].from + 1, g.edges[e].to + 1});
    std::sort(row.removed.begin(), row.removed.end());
    row.before = rec.tsccs_before;
    row.after = rec.tsccs_after;
    f.trace.push_back(std::move(row));
  }
  fields_.push_back(std::move(f));
}

std::vector<int> Report::vertices_1based(const VertexSet& s) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int v : s) out.push_back(v + 1);
  return out;
}

std::vector<std::pair<int, int>> Report::edges_1based(const DirectedGraph& g, const EdgeSet& s) {
  std::vector<std::pair<int, int>> out;
  out.reserve(s.size());
  for (int e : s) out.push_back({g.edges[e].from + 1, g.edges[e].to + 1});
  std::sort(out.begin(), out.end());
  return out;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const Field& f : fields_) {
    switch (f.kind) {
      case Field::kScalar:
        out << f.key << ": " << f.text << '\n';
        break;
      case Field::kInt:
        out << f.key << ": " << f.number << '\n';
        break;
      case Field::kBool:
        out << f.key << ": " << (f.flag ? "true" : "false") << '\n';
        break;
      case Field::kIntList:
        out << f.key << ':';
        for (int v : f.ints) out << ' ' << v;
        out << '\n';
        break;
      case Field::kPairList:
        out << f.key << ':';
        for (auto [u, v] : f.pairs) out << " (" << u << ',' << v << ')';
        out << '\n';
        break;
      case Field::kNestedList: {
        out << f.key << ": " << f.nested.size() << '\n';
        int i = 0;
        for (const auto& list : f.nested) {
          out << "  " << ++i << ':';
          for (int v : list) out << ' ' << v;
          out << '\n';
        }
        break;
      }
      case Field::kTrace: {
        out << f.key << ": " << f.trace.size() << " iterations\n";
        int i = 0;
        for (const auto& row : f.trace) {
          out << "  " << ++i << ": +(" << row.added.first << ',' << row.added.second << ')';
          if (!row.removed.empty()) {
            out << " -";
            for (auto [u, v] : row.removed) out << '(' << u << ',' << v << ')';
          }
          out << " tsccs " << row.before << "->" << row.after << '\n';
        }
        break;
      }
    }
  }
  return out.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  for (const Field& f : fields_) {
    switch (f.kind) {
      case Field::kScalar:
        j[f.key] = f.text;
        break;
      case Field::kInt:
        j[f.key] = f.number;
        break;
      case Field::kBool:
        j[f.key] = f.flag;
        break;
      case Field::kIntList:
        j[f.key] = f.ints;
        break;
      case Field::kPairList: {
        auto arr = nlohmann::ordered_json::array();
        for (auto [u, v] : f.pairs) arr.push_back({u, v});
        j[f.key] = std::move(arr);
        break;
      }
      case Field::kNestedList:
        j[f.key] = f.nested;
        break;
      case Field::kTrace: {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& row : f.trace) {
          nlohmann::ordered_json item;
          item["added"] = {row.added.first, row.added.second};
          auto removed = nlohmann::ordered_json::array();
          for (auto [u, v] : row.removed) removed.push_back({u, v});
          item["removed"] = std::move(removed);
          item["tsccs_before"] = row.before;
          item["tsccs_after"] = row.after;
          arr.push_back(std::move(item));
        }
        j[f.key] = std::move(arr);
        break;
      }
    }
  }
  return j.dump(2) + "\n";
}

}  // namespace twinless
