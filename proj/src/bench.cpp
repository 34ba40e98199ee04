#include "tempiso/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

namespace tempiso {
namespace {

using Clock = std::chrono::steady_clock;

constexpr const char* kBenchHeader =
    "network,query,d_seconds,strategy,wall_time_s,embeddings,candidates,spurious,states,timeout";
constexpr const char* kSpeedupHeader = "network,query,d_seconds,speedup,diameter,total_size";
constexpr const char* kPredictorHeader = "network,query,d_seconds,speedup,spurious,diameter,total_size";

// Wall times this small are below clock resolution; dividing by them would
// only amplify noise.
constexpr double kMinWallTime = 1e-9;

struct Cell {
  std::size_t query;
  std::size_t d;
  std::size_t strategy;
};

BenchRecord run_cell(const TemporalGraph& host, const BenchConfig& config, const Cell& cell) {
  const QuerySpec& q = config.queries[cell.query];
  BenchRecord rec;
  rec.network = config.network;
  rec.query = q.id;
  rec.d = config.schedule[cell.d];
  rec.strategy = config.strategies[cell.strategy];

  const double timeout_s = config.cell_timeout.count();
  std::vector<double> times;
  for (std::size_t r = 0; r < std::max<std::size_t>(config.repeats, 1); ++r) {
    SearchOptions options;
    options.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(config.cell_timeout);
    options.max_fragments = config.max_fragments;
    MatchResult result;
    try {
      result = match(rec.strategy, host, q.graph, rec.d, options);
    } catch (const ResourceLimitError&) {
      rec.timeout = true;
      break;
    }
    rec.embeddings = result.embeddings.size();
    rec.candidates = result.stats.candidates;
    rec.spurious = result.stats.spurious;
    rec.states = result.stats.states_expanded;
    if (result.stats.timed_out) {
      rec.timeout = true;
      break;
    }
    times.push_back(std::chrono::duration<double>(result.stats.wall_time).count());
  }
  if (rec.timeout) {
    rec.wall_time_s = timeout_s;
  } else {
    std::sort(times.begin(), times.end());
    const std::size_t n = times.size();
    rec.wall_time_s = n % 2 == 1 ? times[n / 2] : 0.5 * (times[n / 2 - 1] + times[n / 2]);
  }
  return rec;
}

std::string d_field(Threshold d) { return d.is_infinite() ? "inf" : std::to_string(d.value()); }

std::string format_double(double v) {
  std::ostringstream s;
  s.precision(9);
  s << v;
  return s.str();
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <class T>
T parse_number(const std::string& field, std::size_t line) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, "bad number '" + field + "'");
  }
  return value;
}

double parse_double(const std::string& field, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "bad number '" + field + "'");
  }
}

const QuerySpec* lookup(const std::vector<QuerySpec>& queries, const std::string& id) {
  for (const auto& q : queries) {
    if (q.id == id) return &q;
  }
  return nullptr;
}

using CellKey = std::tuple<std::string, std::string, Threshold>;

struct CellPair {
  const BenchRecord* toti = nullptr;
  const BenchRecord* titoto = nullptr;
};

std::map<CellKey, CellPair> pair_up(const std::vector<BenchRecord>& records) {
  std::map<CellKey, CellPair> cells;
  for (const auto& r : records) {
    auto& cell = cells[{r.network, r.query, r.d}];
    if (r.strategy == Strategy::TopologyBeforeTime) cell.toti = &r;
    if (r.strategy == Strategy::TimeAndTopologyTogether) cell.titoto = &r;
  }
  return cells;
}

double ratio(const BenchRecord& toti, const BenchRecord& titoto) {
  return std::max(toti.wall_time_s, kMinWallTime) / std::max(titoto.wall_time_s, kMinWallTime);
}

std::vector<double> ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) out[order[k]] = avg;
    i = j + 1;
  }
  return out;
}

}  // namespace

std::vector<BenchRecord> run_bench(const TemporalGraph& host, const BenchConfig& config) {
  std::vector<Cell> cells;
  for (std::size_t q = 0; q < config.queries.size(); ++q) {
    for (std::size_t d = 0; d < config.schedule.size(); ++d) {
      for (std::size_t s = 0; s < config.strategies.size(); ++s) cells.push_back({q, d, s});
    }
  }
  std::vector<BenchRecord> records(cells.size());
  const std::size_t workers = std::clamp<std::size_t>(config.workers, 1, std::max<std::size_t>(cells.size(), 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) records[i] = run_cell(host, config, cells[i]);
    return records;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cells.size(); i = next++) {
        try {
          records[i] = run_cell(host, config, cells[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

DSchedule auto_schedule(const TemporalGraph& host) {
  const DeltaDistribution dist = adjacent_deltas(host);
  return derive_schedule(detect_elbow(dist));
}

std::vector<SpeedupRow> speedup_rows(const std::vector<BenchRecord>& records,
                                     const std::vector<QuerySpec>& queries) {
  std::vector<SpeedupRow> rows;
  for (const auto& [key, cell] : pair_up(records)) {
    if (!cell.toti || !cell.titoto) continue;
    const QuerySpec* q = lookup(queries, std::get<1>(key));
    if (!q) continue;
    rows.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), ratio(*cell.toti, *cell.titoto),
                    q->graph.undirected_diameter(), q->graph.order() + q->graph.size()});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SpeedupRow& a, const SpeedupRow& b) { return a.speedup > b.speedup; });
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchHeader << '\n';
  for (const auto& r : records) {
    out << r.network << ',' << r.query << ',' << d_field(r.d) << ',' << strategy_name(r.strategy) << ','
        << format_double(r.wall_time_s) << ',' << r.embeddings << ',' << r.candidates << ',' << r.spurious
        << ',' << r.states << ',' << (r.timeout ? 1 : 0) << '\n';
  }
}

void write_speedup_csv(std::ostream& out, const std::vector<SpeedupRow>& rows) {
  out << kSpeedupHeader << '\n';
  for (const auto& r : rows) {
    out << r.network << ',' << r.query << ',' << d_field(r.d) << ',' << format_double(r.speedup) << ','
        << r.diameter << ',' << r.total_size << '\n';
  }
}

std::vector<BenchRecord> read_bench_csv(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line)) throw ParseError(1, "missing bench header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kBenchHeader) throw ParseError(1, "unexpected bench header");
  std::vector<BenchRecord> out;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 10) throw ParseError(lineno, "expected 10 fields");
    BenchRecord r;
    r.network = f[0];
    r.query = f[1];
    r.d = f[2] == "inf" ? Threshold::infinite() : Threshold::finite(parse_number<Duration>(f[2], lineno));
    try {
      r.strategy = parse_strategy(f[3]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    r.wall_time_s = parse_double(f[4], lineno);
    r.embeddings = parse_number<std::uint64_t>(f[5], lineno);
    r.candidates = parse_number<std::uint64_t>(f[6], lineno);
    r.spurious = parse_number<std::uint64_t>(f[7], lineno);
    r.states = parse_number<std::uint64_t>(f[8], lineno);
    r.timeout = parse_number<int>(f[9], lineno) != 0;
    out.push_back(std::move(r));
  }
  return out;
}

double spearman(const std::vector<double>& x, const std::vector<double>& y) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (x.size() != y.size() || x.size() < 2) return nan;
  const auto rx = ranks(x);
  const auto ry = ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) return nan;
  return sxy / std::sqrt(sxx * syy);
}

PredictorReport predictor_report(const std::vector<BenchRecord>& records,
                                 const std::vector<QuerySpec>& queries) {
  PredictorReport report;
  for (const auto& [key, cell] : pair_up(records)) {
    const auto& [network, query, d] = key;
    const std::string where = network + "/" + query + "/" + d_field(d);
    if (!cell.toti || !cell.titoto) {
      report.incomplete.push_back(where + ": missing " + std::string(cell.toti ? "titoto" : "toti"));
      continue;
    }
    const QuerySpec* q = lookup(queries, query);
    if (!q) {
      report.incomplete.push_back(where + ": unknown query");
      continue;
    }
    report.rows.push_back({network, query, d, ratio(*cell.toti, *cell.titoto), cell.toti->spurious,
                           q->graph.undirected_diameter(), q->graph.order() + q->graph.size()});
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const PredictorRow& a, const PredictorRow& b) { return a.speedup > b.speedup; });

  std::vector<double> speedup, spurious, diameter, total;
  for (const auto& r : report.rows) {
    speedup.push_back(r.speedup);
    spurious.push_back(static_cast<double>(r.spurious));
    diameter.push_back(r.diameter);
    total.push_back(static_cast<double>(r.total_size));
  }
  report.rho_spurious = spearman(spurious, speedup);
  report.rho_diameter = spearman(diameter, speedup);
  report.rho_total_size = spearman(total, speedup);
  return report;
}

void write_predictor_csv(std::ostream& out, const PredictorReport& report) {
  out << kPredictorHeader << '\n';
  for (const auto& r : report.rows) {
    out << r.network << ',' << r.query << ',' << d_field(r.d) << ',' << format_double(r.speedup) << ','
        << r.spurious << ',' << r.diameter << ',' << r.total_size << '\n';
  }
  out << "# spearman spurious=" << format_double(report.rho_spurious)
      << " diameter=" << format_double(report.rho_diameter)
      << " total_size=" << format_double(report.rho_total_size) << '\n';
}

}  // namespace tempiso
