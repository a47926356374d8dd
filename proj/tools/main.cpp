#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "twinless/cuts.hpp"
#include "twinless/edge_list.hpp"
#include "twinless/errors.hpp"
#include "twinless/fixtures.hpp"
#include "twinless/generate.hpp"
#include "twinless/graph.hpp"
#include "twinless/mtscss.hpp"
#include "twinless/oracle.hpp"
#include "twinless/report.hpp"
#include "twinless/strong.hpp"
#include "twinless/tscc.hpp"
#include "twinless/vtcc.hpp"

namespace {

using namespace twinless;

struct CommonOpts {
  std::string input = "-";
  std::string format = "text";
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--input", opts.input, "Edge list file ('-' for standard input)");
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--timing", opts.timing, "Append wall-clock time to the report");
}

DirectedGraph load_graph(const CommonOpts& opts) {
  ParsedEdgeList doc;
  if (opts.input == "-") {
    doc = parse_edge_list(std::cin);
  } else {
    std::ifstream in(opts.input);
    if (!in) throw InputError("cannot open input file: " + opts.input);
    doc = parse_edge_list(in);
  }
  BuildStats stats;
  DirectedGraph g = graph_from_edge_list(doc, &stats);
  if (stats.self_loops_dropped || stats.duplicates_dropped)
    std::cerr << "warning: dropped " << stats.self_loops_dropped << " self-loop(s) and "
              << stats.duplicates_dropped << " duplicate arc(s)\n";
  return g;
}

class Timer {
 public:
  long long ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(Report& report, const CommonOpts& opts, const Timer& timer) {
  if (opts.timing) report.add_scalar("wall_ms", timer.ms());
  std::cout << (opts.format == "json" ? report.to_json() : report.to_text());
}

void add_input_summary(Report& report, const std::string& command, const DirectedGraph& g) {
  report.add_scalar("command", command);
  report.add_scalar("n", g.n);
  report.add_scalar("m", g.edge_count());
  report.add_scalar("input_hash", hash_hex(edge_list_hash(g)));
}

std::vector<std::vector<int>> components_1based(const ComponentLabeling& labels) {
  std::vector<std::vector<int>> out;
  for (const auto& members : labels.members()) {
    std::vector<int> ids;
    ids.reserve(members.size());
    for (Vertex v : members) ids.push_back(v + 1);
    out.push_back(std::move(ids));
  }
  return out;
}

std::vector<std::vector<int>> sets_1based(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const VertexSet& s : sets) out.push_back(Report::vertices_1based(s));
  return out;
}

int run_check(const CommonOpts& opts, const std::string& what) {
  DirectedGraph g = load_graph(opts);
  Timer timer;
  bool result = false;
  if (what == "sc")
    result = is_strongly_connected(g);
  else if (what == "tsc")
    result = is_twinless_strongly_connected(g);
  else if (what == "2vc")
    result = is_two_vertex_connected(g);
  else if (what == "2vtc")
    result = is_two_vertex_twinless_connected(g);
  else if (what == "2etc")
    result = is_two_edge_twinless_connected(g);
  Report report;
  add_input_summary(report, "check " + what, g);
  report.add_flag("result", result);
  emit(report, opts, timer);
  return 0;
}

int run_components(const CommonOpts& opts, const std::string& command) {
  DirectedGraph g = load_graph(opts);
  Timer timer;
  ComponentLabeling labels = command == "scc" ? sccs(g) : tsccs(g);
  Report report;
  add_input_summary(report, command, g);
  report.add_scalar("count", labels.count);
  report.add_nested_list("components", components_1based(labels));
  emit(report, opts, timer);
  return 0;
}

int run_2vcc_oracle(const CommonOpts& opts, int max_n) {
  DirectedGraph g = load_graph(opts);
  Timer timer;
  OracleBudget budget;
  budget.max_n = max_n;
  auto sets = oracle_2vcc(g, budget);
  Report report;
  add_input_summary(report, "2vcc-oracle", g);
  report.add_scalar("count", static_cast<long long>(sets.size()));
  report.add_nested_list("components", sets_1based(sets));
  emit(report, opts, timer);
  return 0;
}

int run_vertex_cuts(const CommonOpts& opts, const std::string& command) {
  DirectedGraph g = load_graph(opts);
  Timer timer;
  Report report;
  add_input_summary(report, command, g);
  if (command == "sap") {
    VertexSet saps = strong_articulation_points(g);
    report.add_int_list("saps", Report::vertices_1based(saps));
    report.add_scalar("count", saps.size());
  } else {
    TwinlessCutReport cuts = twinless_articulation_points(g);
    report.add_int_list("taps", Report::vertices_1based(cuts.taps));
    report.add_scalar("count", cuts.taps.size());
    report.add_scalar("method", cuts.method);
    report.add_scalar("seed_count", cuts.seed_count);
    report.add_scalar("tested_count", cuts.tested_count);
  }
  emit(report, opts, timer);
  return 0;
}

int run_edge_cuts(const CommonOpts& opts, const std::string& command, bool sparse) {
  DirectedGraph g = load_graph(opts);
  Timer timer;
  Report report;
  if (command == "sbridge") {
    EdgeSet bridges = strong_bridges(g);
    add_input_summary(report, command, g);
    report.add_pair_list("sbridges", Report::edges_1based(g, bridges));
    report.add_scalar("count", bridges.size());
  } else {
    TwinlessCutReport cuts = sparse ? twinless_bridges_sparse(g) : twinless_bridges_basic(g);
    add_input_summary(report, sparse ? "tbridge --sparse" : "tbridge", g);
    report.add_pair_list("tbridges", Report::edges_1based(g, cuts.tbridges));
    report.add_scalar("count", cuts.tbridges.size());
    report.add_scalar("method", cuts.method);
    report.add_scalar("seed_count", cuts.seed_count);
    report.add_scalar("tested_count", cuts.tested_count);
    if (cuts.degraded_non_tsc_input)
      report.add_flag("degraded_non_tsc_input", true);
  }
  emit(report, opts, timer);
  return 0;
}

int run_mtscss(const CommonOpts& opts, const std::string& algo, bool trace) {
  DirectedGraph g = load_graph(opts);
  Timer timer;
  SpanningSubgraphResult result;
  if (algo == "3approx")
    result = mtscss_3approx(g);
  else if (algo == "2approx")
    result = mtscss_2approx(g);
  else if (algo == "repair")
    result = mtscss_repair(g);
  else
    result = mtscss_repair_fast(g);
  Report report;
  add_input_summary(report, "mtscss --algo " + algo, g);
  report.add_scalar("algorithm", result.algorithm);
  report.add_scalar("size", result.edges.size());
  report.add_scalar("size_bound", result.size_bound);
  report.add_flag("bound_held", result.bound_held);
  report.add_scalar("iterations", static_cast<long long>(result.trace.size()));
  report.add_pair_list("edges", Report::edges_1based(g, result.edges));
  if (trace) report.add_trace("trace", g, result.trace);
  emit(report, opts, timer);
  return 0;
}

int run_2vtcc(const CommonOpts& opts) {
  DirectedGraph g = load_graph(opts);
  Timer timer;
  Vtcc2Report result = two_vertex_twinless_components(g);
  Report report;
  add_input_summary(report, "2vtcc", g);
  report.add_scalar("count", static_cast<long long>(result.components.size()));
  report.add_nested_list("components", sets_1based(result.components));
  report.add_scalar("recursion_depth", result.recursion_depth);
  report.add_scalar("subproblems", result.subproblem_count);
  emit(report, opts, timer);
  return 0;
}

int run_gen(const std::string& kind, int n, int m, uint64_t seed) {
  DirectedGraph g;
  if (kind == "cycle")
    g = gen_cycle(n);
  else if (kind == "random-sc")
    g = gen_random_sc(n, m, seed);
  else
    g = gen_random_tsc(n, m, seed);
  std::cout << serialize_edge_list(g);
  return 0;
}

int run_fixtures(const std::string& name, const std::string& dir) {
  if (!dir.empty()) {
    for (const Fixture& f : all_fixtures()) {
      std::ofstream out(dir + "/" + f.name + ".edges");
      if (!out) throw InputError("cannot write to directory: " + dir);
      out << serialize_edge_list(fixture_graph(f.name));
    }
    return 0;
  }
  if (!name.empty()) {
    std::cout << serialize_edge_list(fixture_graph(name));
    return 0;
  }
  for (const Fixture& f : all_fixtures()) std::cout << f.name << '\n';
  return 0;
}

struct BenchCase {
  std::string label;
  DirectedGraph graph;
};

int run_bench(const std::string& suite_path) {
  std::ifstream in(suite_path);
  if (!in) throw InputError("cannot open suite file: " + suite_path);
  std::vector<BenchCase> cases;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string label, kind;
    if (!(fields >> label)) continue;
    if (label[0] == '#') continue;
    if (!(fields >> kind)) throw InputError("suite line " + std::to_string(line_no) +
                                            ": expected generator spec");
    if (kind == "fixture") {
      std::string name;
      if (!(fields >> name))
        throw InputError("suite line " + std::to_string(line_no) + ": expected fixture name");
      cases.push_back({label, fixture_graph(name)});
    } else if (kind == "cycle") {
      int n;
      if (!(fields >> n))
        throw InputError("suite line " + std::to_string(line_no) + ": expected N");
      cases.push_back({label, gen_cycle(n)});
    } else if (kind == "random-sc" || kind == "random-tsc") {
      long long n, m, seed;
      if (!(fields >> n >> m >> seed))
        throw InputError("suite line " + std::to_string(line_no) + ": expected N M SEED");
      cases.push_back({label, kind == "random-sc"
                                  ? gen_random_sc(static_cast<int>(n), static_cast<int>(m),
                                                  static_cast<uint64_t>(seed))
                                  : gen_random_tsc(static_cast<int>(n), static_cast<int>(m),
                                                   static_cast<uint64_t>(seed))});
    } else {
      throw InputError("suite line " + std::to_string(line_no) + ": unknown generator '" +
                       kind + "'");
    }
  }

  std::cout << "case n m op result ms\n";
  for (const BenchCase& c : cases) {
    auto row = [&](const std::string& op, long long result, long long ms) {
      std::cout << c.label << ' ' << c.graph.n << ' ' << c.graph.edge_count() << ' ' << op
                << ' ' << result << ' ' << ms << '\n';
    };
    {
      Timer t;
      ComponentLabeling labels = tsccs(c.graph);
      row("tscc", labels.count, t.ms());
    }
    bool sc = is_strongly_connected(c.graph);
    if (sc && c.graph.n >= 3) {
      Timer t;
      VertexSet saps = strong_articulation_points(c.graph);
      row("sap", saps.size(), t.ms());
    }
    if (sc) {
      Timer t;
      EdgeSet sb = strong_bridges(c.graph);
      row("sbridge", sb.size(), t.ms());
    }
    if (c.graph.n >= 3 && is_twinless_strongly_connected(c.graph)) {
      {
        Timer t;
        TwinlessCutReport cuts = twinless_articulation_points(c.graph);
        row("tap", cuts.taps.size(), t.ms());
      }
      {
        Timer t;
        TwinlessCutReport cuts = twinless_bridges_sparse(c.graph);
        row("tbridge-sparse", cuts.tbridges.size(), t.ms());
      }
      {
        Timer t;
        SpanningSubgraphResult r = mtscss_3approx(c.graph);
        row("mtscss-3approx", r.edges.size(), t.ms());
      }
      {
        Timer t;
        SpanningSubgraphResult r = mtscss_2approx(c.graph);
        row("mtscss-2approx", r.edges.size(), t.ms());
      }
      {
        Timer t;
        SpanningSubgraphResult r = mtscss_repair_fast(c.graph);
        row("mtscss-repair-fast", r.edges.size(), t.ms());
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twinless strong connectivity toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  // check
  {
    auto* cmd = app.add_subcommand("check", "Connectivity predicates");
    auto opts = std::make_shared<CommonOpts>();
    auto what = std::make_shared<std::string>();
    cmd->add_option("what", *what, "Predicate")
        ->required()
        ->check(CLI::IsMember({"sc", "tsc", "2vc", "2vtc", "2etc"}));
    add_common(cmd, *opts);
    cmd->callback([&action, opts, what] {
      action = [opts, what] { return run_check(*opts, *what); };
    });
  }
  for (const char* name : {"scc", "tscc"}) {
    auto* cmd = app.add_subcommand(name, std::string(name) == "scc"
                                             ? "Strongly connected components"
                                             : "Twinless strongly connected components");
    auto opts = std::make_shared<CommonOpts>();
    add_common(cmd, *opts);
    std::string command = name;
    cmd->callback([&action, opts, command] {
      action = [opts, command] { return run_components(*opts, command); };
    });
  }
  {
    auto* cmd = app.add_subcommand("2vcc-oracle",
                                   "2-vertex-connected components (brute force, small graphs)");
    auto opts = std::make_shared<CommonOpts>();
    auto max_n = std::make_shared<int>(8);
    cmd->add_option("--max-n", *max_n, "Budget for the exhaustive search");
    add_common(cmd, *opts);
    cmd->callback([&action, opts, max_n] {
      action = [opts, max_n] { return run_2vcc_oracle(*opts, *max_n); };
    });
  }
  for (const char* name : {"sap", "tap"}) {
    auto* cmd = app.add_subcommand(name, std::string(name) == "sap"
                                             ? "Strong articulation points"
                                             : "Twinless articulation points");
    auto opts = std::make_shared<CommonOpts>();
    add_common(cmd, *opts);
    std::string command = name;
    cmd->callback([&action, opts, command] {
      action = [opts, command] { return run_vertex_cuts(*opts, command); };
    });
  }
  {
    auto* cmd = app.add_subcommand("sbridge", "Strong bridges");
    auto opts = std::make_shared<CommonOpts>();
    add_common(cmd, *opts);
    cmd->callback([&action, opts] {
      action = [opts] { return run_edge_cuts(*opts, "sbridge", false); };
    });
  }
  {
    auto* cmd = app.add_subcommand("tbridge", "Twinless bridges");
    auto opts = std::make_shared<CommonOpts>();
    auto sparse = std::make_shared<bool>(false);
    cmd->add_flag("--sparse", *sparse, "Restrict candidates to the sparse certificate");
    add_common(cmd, *opts);
    cmd->callback([&action, opts, sparse] {
      action = [opts, sparse] { return run_edge_cuts(*opts, "tbridge", *sparse); };
    });
  }
  {
    auto* cmd = app.add_subcommand("mtscss", "Approximate minimum twinless strongly "
                                             "connected spanning subgraph");
    auto opts = std::make_shared<CommonOpts>();
    auto algo = std::make_shared<std::string>();
    auto trace = std::make_shared<bool>(false);
    cmd->add_option("--algo", *algo, "Algorithm")
        ->required()
        ->check(CLI::IsMember({"3approx", "2approx", "repair", "repair-fast"}));
    cmd->add_flag("--trace", *trace, "Include the per-iteration trace");
    add_common(cmd, *opts);
    cmd->callback([&action, opts, algo, trace] {
      action = [opts, algo, trace] { return run_mtscss(*opts, *algo, *trace); };
    });
  }
  {
    auto* cmd = app.add_subcommand("2vtcc", "2-vertex-twinless-connected components");
    auto opts = std::make_shared<CommonOpts>();
    add_common(cmd, *opts);
    cmd->callback([&action, opts] {
      action = [opts] { return run_2vtcc(*opts); };
    });
  }
  {
    auto* cmd = app.add_subcommand("gen", "Emit a generated edge list");
    auto kind = std::make_shared<std::string>();
    auto n = std::make_shared<int>(0);
    auto m = std::make_shared<int>(0);
    auto seed = std::make_shared<uint64_t>(0);
    cmd->add_option("kind", *kind, "Generator")
        ->required()
        ->check(CLI::IsMember({"cycle", "random-sc", "random-tsc"}));
    cmd->add_option("n", *n, "Vertex count")->required();
    cmd->add_option("m", *m, "Edge count (random generators)");
    cmd->add_option("--seed", *seed, "64-bit PRNG seed");
    cmd->callback([&action, kind, n, m, seed] {
      action = [kind, n, m, seed] { return run_gen(*kind, *n, *m, *seed); };
    });
  }
  {
    auto* cmd = app.add_subcommand("fixtures", "Bundled example graphs");
    auto name = std::make_shared<std::string>();
    auto dir = std::make_shared<std::string>();
    cmd->add_option("--name", *name, "Emit one fixture as an edge list");
    cmd->add_option("--dir", *dir, "Write every fixture to DIR/<name>.edges");
    cmd->callback([&action, name, dir] {
      action = [name, dir] { return run_fixtures(*name, *dir); };
    });
  }
  {
    auto* cmd = app.add_subcommand("bench", "Run the algorithm suite over generated cases");
    auto suite = std::make_shared<std::string>();
    cmd->add_option("--suite", *suite, "Suite file")->required();
    cmd->callback([&action, suite] {
      action = [suite] { return run_bench(*suite); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action();
  } catch (const twinless::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const twinless::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
