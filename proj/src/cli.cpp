#include "tempiso/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tempiso/bench.hpp"
#include "tempiso/catalog.hpp"
#include "tempiso/danalysis.hpp"
#include "tempiso/duration.hpp"
#include "tempiso/engine.hpp"
#include "tempiso/jsonl.hpp"
#include "tempiso/synthetic.hpp"

namespace tempiso {
namespace {

namespace fs = std::filesystem;

// Thrown for option values that CLI11 accepted syntactically but that make no
// sense (unknown strategy, malformed duration, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable input files are grouped with parse failures: either way the
// input could not be turned into a graph.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto usage_guard(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(what + ": " + e.what());
  }
}

TemporalGraph read_graph(const std::string& path, const std::string& unit) {
  const TimeUnit u = usage_guard("--unit", [&] { return parse_time_unit(unit); });
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph '" + path + "'");
  try {
    return parse_edge_list(in, u);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

QuerySpec query_from_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open query '" + path.string() + "'");
  QuerySpec spec{path.stem().string(), path.stem().string(), parse_query(in), QueryFamily::Named,
                 "from " + path.filename().string()};
  return spec;
}

QuerySpec resolve_query(const std::string& key, std::uint64_t seed) {
  if (fs::is_regular_file(key)) return query_from_file(key);
  const auto catalog = default_catalog(seed);
  if (auto q = find_query(catalog, key)) return *q;
  throw UsageError("--query: '" + key + "' is neither a file nor a catalog id or name");
}

std::vector<QuerySpec> resolve_queries(const std::string& spec, std::uint64_t seed) {
  if (spec == "catalog") return default_catalog(seed);
  if (fs::is_directory(spec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(spec)) {
      if (entry.is_regular_file() && entry.path().extension() == ".edges") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw UsageError("--queries: no .edges files in '" + spec + "'");
    std::vector<QuerySpec> out;
    for (const auto& f : files) out.push_back(query_from_file(f));
    return out;
  }
  const auto catalog = default_catalog(seed);
  std::vector<QuerySpec> out;
  std::stringstream items(spec);
  std::string key;
  while (std::getline(items, key, ',')) {
    auto q = find_query(catalog, key);
    if (!q) throw UsageError("--queries: unknown catalog query '" + key + "'");
    out.push_back(*q);
  }
  if (out.empty()) throw UsageError("--queries: empty list");
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  return out;
}

std::string join_schedule(const std::vector<Duration>& points) {
  std::string s;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(points[i]);
  }
  return s;
}

struct MatchArgs {
  std::string graph, query, d = "inf", strategy = "titoto", stats, unit = "seconds";
  double timeout = 0;
  std::size_t max_fragments = 1'000'000;
};

int cmd_match(const MatchArgs& a, std::uint64_t seed, std::ostream& out) {
  const Strategy strategy = usage_guard("--strategy", [&] { return parse_strategy(a.strategy); });
  const Threshold d = usage_guard("--d", [&] { return parse_threshold(a.d); });
  const TemporalGraph host = read_graph(a.graph, a.unit);
  const QuerySpec query = resolve_query(a.query, seed);

  SearchOptions options;
  options.max_fragments = a.max_fragments;
  if (a.timeout > 0) {
    options.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(a.timeout));
  }
  const MatchResult result = usage_guard("--query", [&] { return match(strategy, host, query.graph, d, options); });
  if (result.stats.timed_out) throw ResourceLimitError("search timed out after " + std::to_string(a.timeout) + " s");
  write_embeddings_jsonl(out, host, query.graph, query.id, result.embeddings);
  if (!a.stats.empty()) {
    auto s = open_output(a.stats);
    s << stats_json(result.stats, strategy, result.embeddings.size()) << '\n';
  }
  return kExitOk;
}

struct BenchArgs {
  std::string graph, queries = "catalog", schedule = "auto", strategies = "toti,titoto", unit = "seconds";
  std::string out_dir = ".", network;
  std::size_t repeats = 3, workers = 1, max_fragments = 1'000'000;
  double timeout = 300;
};

int cmd_bench(const BenchArgs& a, std::uint64_t seed, std::ostream& out) {
  BenchConfig config;
  config.strategies.clear();
  for (const auto& s : split_list(a.strategies)) {
    config.strategies.push_back(usage_guard("--strategies", [&] { return parse_strategy(s); }));
  }
  if (config.strategies.empty()) throw UsageError("--strategies: empty list");
  if (a.repeats == 0) throw UsageError("--repeats must be at least 1");
  if (a.timeout <= 0) throw UsageError("--timeout must be positive");

  const TemporalGraph host = read_graph(a.graph, a.unit);
  config.network = a.network.empty() ? fs::path(a.graph).stem().string() : a.network;
  config.queries = resolve_queries(a.queries, seed);
  config.repeats = a.repeats;
  config.workers = a.workers;
  config.cell_timeout = std::chrono::duration<double>(a.timeout);
  config.max_fragments = a.max_fragments;
  if (a.schedule == "auto") {
    const DSchedule s = auto_schedule(host);
    out << "# d_max=" << s.d_max << " schedule=" << join_schedule(s.points) << '\n';
    for (Duration p : s.points) config.schedule.push_back(Threshold::finite(p));
  } else {
    for (const auto& v : split_list(a.schedule)) {
      config.schedule.push_back(usage_guard("--schedule", [&] { return parse_threshold(v); }));
    }
    if (config.schedule.empty()) throw UsageError("--schedule: empty list");
  }

  const auto records = run_bench(host, config);
  const fs::path dir(a.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  {
    auto f = open_output(dir / "bench.csv");
    write_bench_csv(f, records);
  }
  {
    auto f = open_output(dir / "speedup.csv");
    write_speedup_csv(f, speedup_rows(records, config.queries));
  }
  std::size_t timeouts = 0;
  for (const auto& r : records) timeouts += r.timeout ? 1 : 0;
  out << "# cells=" << records.size() << " timeouts=" << timeouts << " wrote " << (dir / "bench.csv").string()
      << " and " << (dir / "speedup.csv").string() << '\n';
  return kExitOk;
}

struct AnalyzeArgs {
  std::string graph, unit = "seconds", d_max, percentages;
  std::size_t pair_cap = kDefaultPairCap;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<double> percentages = kDefaultPercentages;
  if (!a.percentages.empty()) {
    percentages.clear();
    for (const auto& p : split_list(a.percentages)) {
      percentages.push_back(usage_guard("--percentages", [&] { return std::stod(p); }));
    }
  }
  const TemporalGraph g = read_graph(a.graph, a.unit);
  const DeltaDistribution dist = adjacent_deltas(g, a.pair_cap);
  out << "threshold,cumulative_count\n";
  for (const auto& [threshold, count] : dist.cumulative) out << threshold << ',' << count << '\n';

  Duration d_max = 0;
  if (!a.d_max.empty()) {
    d_max = usage_guard("--d-max", [&] { return parse_duration(a.d_max); });
  } else {
    try {
      d_max = detect_elbow(dist);
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "; pass --d-max to set the threshold by hand\n";
      return kExitFailure;
    }
  }
  const DSchedule s = usage_guard("--d-max", [&] { return derive_schedule(d_max, percentages); });
  out << "# d_max=" << s.d_max << " schedule=" << join_schedule(s.points) << '\n';
  return kExitOk;
}

int cmd_catalog_list(std::uint64_t seed, std::ostream& out) {
  out << "id\tname\torder\tsize\tdiameter\n";
  for (const auto& q : default_catalog(seed)) {
    out << q.id << '\t' << q.name << '\t' << q.graph.order() << '\t' << q.graph.size() << '\t'
        << q.graph.undirected_diameter() << '\n';
  }
  return kExitOk;
}

int cmd_catalog_export(const std::string& dir, std::uint64_t seed, std::ostream& out) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  const auto catalog = default_catalog(seed);
  for (const auto& q : catalog) {
    auto f = open_output(fs::path(dir) / (q.id + ".edges"));
    write_query(q.graph, q.name + ": " + q.descriptor, f);
  }
  out << "wrote " << catalog.size() << " queries to " << dir << '\n';
  return kExitOk;
}

struct PredictArgs {
  std::string bench, queries = "catalog", out;
};

int cmd_predict(const PredictArgs& a, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  std::ifstream in(a.bench);
  if (!in) throw InputError("cannot open bench file '" + a.bench + "'");
  const auto records = read_bench_csv(in);
  const auto report = predictor_report(records, resolve_queries(a.queries, seed));
  if (a.out.empty()) {
    write_predictor_csv(out, report);
  } else {
    auto f = open_output(a.out);
    write_predictor_csv(f, report);
  }
  if (!report.incomplete.empty()) {
    err << "incomplete cells:\n";
    for (const auto& c : report.incomplete) err << "  " << c << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

struct SliceArgs {
  std::string graph, unit = "seconds", start, end, out;
  std::size_t cap = 0;
};

int cmd_slice(const SliceArgs& a, std::ostream& out) {
  const TemporalGraph g = read_graph(a.graph, a.unit);
  const Timestamp start = a.start.empty() ? g.min_time().value_or(0)
                                          : usage_guard("--start", [&] { return parse_duration(a.start); });
  Timestamp end = 0;
  if (!a.end.empty()) {
    end = usage_guard("--end", [&] { return parse_duration(a.end); });
  } else if (a.cap > 0) {
    end = capped_window_end(g, start, a.cap);
  } else {
    end = g.empty() ? start : *g.max_time() + 1;
  }
  const TemporalGraph s = usage_guard("--start/--end", [&] { return slice(g, start, end); });
  if (a.out.empty()) {
    write_edge_list(s, out);
  } else {
    auto f = open_output(a.out);
    write_edge_list(s, f);
  }
  return kExitOk;
}

struct GenerateArgs {
  std::string kind = "flow", out;
  std::uint64_t seed = 1;
  std::size_t nodes = 1000, interactions = 5000, reach = 10;
  Timestamp span = 1'000'000;
  double backward = 0.0;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  TemporalGraph g = usage_guard("generate", [&] {
    if (a.kind == "flow") {
      FlowNetworkParams p;
      p.nodes = a.nodes;
      p.interactions = a.interactions;
      p.reach = a.reach;
      p.backward_fraction = a.backward;
      p.time_span = a.span;
      return ranked_flow_network(a.seed, p);
    }
    if (a.kind == "random") return random_temporal_graph(a.seed, a.nodes, a.interactions, a.span);
    if (a.kind == "chain") return chain_graph(a.nodes, a.span);
    throw std::invalid_argument("unknown kind '" + a.kind + "'");
  });
  if (a.out.empty()) {
    write_edge_list(g, out);
  } else {
    auto f = open_output(a.out);
    write_edge_list(g, f);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Time-respecting subgraph matching in temporal networks", "tempiso"};
  app.require_subcommand(1);
  std::uint64_t seed = kDefaultCatalogSeed;
  app.add_option("--catalog-seed", seed, "Seed of the random part of the query catalog")->capture_default_str();

  MatchArgs m;
  auto* match_cmd = app.add_subcommand("match", "Find all embeddings of one query");
  match_cmd->add_option("--graph", m.graph, "Edge-list file")->required();
  match_cmd->add_option("--query", m.query, "Query edge-list file, or catalog id/name")->required();
  match_cmd->add_option("--d", m.d, "Threshold: 90, 90s, 3d, 2y or inf")->capture_default_str();
  match_cmd->add_option("--strategy", m.strategy, "static, toti, titoto or tbt")->capture_default_str();
  match_cmd->add_option("--stats", m.stats, "Write search statistics as JSON here");
  match_cmd->add_option("--unit", m.unit, "Time unit of the graph file: seconds, days, years, ticks")
      ->capture_default_str();
  match_cmd->add_option("--timeout", m.timeout, "Abort after this many seconds (0: no limit)");
  match_cmd->add_option("--max-fragments", m.max_fragments, "tbt: cap on extracted subgraphs")
      ->capture_default_str();

  BenchArgs b;
  auto* bench_cmd = app.add_subcommand("bench", "Time strategies over queries and thresholds");
  bench_cmd->add_option("--graph", b.graph, "Edge-list file")->required();
  bench_cmd->add_option("--queries", b.queries, "catalog, a directory of .edges files, or id list")
      ->capture_default_str();
  bench_cmd->add_option("--schedule", b.schedule, "auto, or comma-separated thresholds")->capture_default_str();
  bench_cmd->add_option("--strategies", b.strategies, "Comma-separated strategies")->capture_default_str();
  bench_cmd->add_option("--repeats", b.repeats, "Runs per cell; the median is kept")->capture_default_str();
  bench_cmd->add_option("--workers", b.workers, "Cells run concurrently")->capture_default_str();
  bench_cmd->add_option("--timeout", b.timeout, "Per-cell timeout in seconds")->capture_default_str();
  bench_cmd->add_option("--out-dir", b.out_dir, "Where bench.csv and speedup.csv go")->capture_default_str();
  bench_cmd->add_option("--network", b.network, "Network id for the CSVs (default: file stem)");
  bench_cmd->add_option("--unit", b.unit, "Time unit of the graph file")->capture_default_str();
  bench_cmd->add_option("--max-fragments", b.max_fragments, "tbt: cap on extracted subgraphs")
      ->capture_default_str();

  AnalyzeArgs an;
  auto* analyze_cmd = app.add_subcommand("analyze-d", "Adjacent-delta distribution and threshold schedule");
  analyze_cmd->add_option("--graph", an.graph, "Edge-list file")->required();
  analyze_cmd->add_option("--unit", an.unit, "Time unit of the graph file")->capture_default_str();
  analyze_cmd->add_option("--d-max", an.d_max, "Use this d_max instead of the detected elbow");
  analyze_cmd->add_option("--percentages", an.percentages, "Comma-separated fractions of d_max");
  analyze_cmd->add_option("--pair-cap", an.pair_cap, "Refuse graphs with more adjacent pairs")
      ->capture_default_str();

  std::string export_dir;
  auto* catalog_cmd = app.add_subcommand("catalog", "Inspect the query catalog");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "Print id, order, size and diameter");
  auto* export_cmd = catalog_cmd->add_subcommand("export", "Write each query as qNN.edges");
  export_cmd->add_option("--dir", export_dir, "Target directory")->required();

  PredictArgs p;
  auto* predict_cmd = app.add_subcommand("predict", "Speedup predictors from a bench.csv");
  predict_cmd->add_option("--bench", p.bench, "bench.csv path")->required();
  predict_cmd->add_option("--queries", p.queries, "Queries the bench was run with")->capture_default_str();
  predict_cmd->add_option("--out", p.out, "Write the report here instead of standard output");

  SliceArgs s;
  auto* slice_cmd = app.add_subcommand("slice", "Keep interactions with start <= time < end");
  slice_cmd->add_option("--graph", s.graph, "Edge-list file")->required();
  slice_cmd->add_option("--unit", s.unit, "Time unit of the graph file")->capture_default_str();
  slice_cmd->add_option("--start", s.start, "Window start in seconds (default: first interaction)");
  slice_cmd->add_option("--end", s.end, "Window end in seconds, exclusive");
  slice_cmd->add_option("--cap", s.cap, "Without --end: widest window holding at most this many interactions");
  slice_cmd->add_option("--out", s.out, "Output file (default: standard output)");

  GenerateArgs g;
  auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic temporal network");
  generate_cmd->add_option("--kind", g.kind, "flow, random or chain")->capture_default_str();
  generate_cmd->add_option("--seed", g.seed, "Random seed")->capture_default_str();
  generate_cmd->add_option("--nodes", g.nodes, "Node count")->capture_default_str();
  generate_cmd->add_option("--interactions", g.interactions, "Interaction count")->capture_default_str();
  generate_cmd->add_option("--reach", g.reach, "flow: rank distance of targets")->capture_default_str();
  generate_cmd->add_option("--span", g.span, "Time span (chain: gap between hops)")->capture_default_str();
  generate_cmd->add_option("--backward", g.backward, "flow: share of backward interactions")
      ->capture_default_str();
  generate_cmd->add_option("--out", g.out, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadArguments;
  }

  try {
    if (*match_cmd) return cmd_match(m, seed, out);
    if (*bench_cmd) return cmd_bench(b, seed, out);
    if (*analyze_cmd) return cmd_analyze(an, out, err);
    if (*list_cmd) return cmd_catalog_list(seed, out);
    if (*export_cmd) return cmd_catalog_export(export_dir, seed, out);
    if (*predict_cmd) return cmd_predict(p, seed, out, err);
    if (*slice_cmd) return cmd_slice(s, out);
    if (*generate_cmd) return cmd_generate(g, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseFailure;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseFailure;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitBadArguments;
}

}  // namespace tempiso
