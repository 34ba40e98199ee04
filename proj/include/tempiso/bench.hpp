#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

#include "tempiso/catalog.hpp"
#include "tempiso/danalysis.hpp"
#include "tempiso/engine.hpp"

namespace tempiso {

struct BenchRecord {
  std::string network;
  std::string query;
  Threshold d = Threshold::infinite();
  Strategy strategy = Strategy::TopologyBeforeTime;
  double wall_time_s = 0.0;  // median over repeats, or the timeout when one was hit
  std::uint64_t embeddings = 0;
  std::uint64_t candidates = 0;
  std::uint64_t spurious = 0;
  std::uint64_t states = 0;
  bool timeout = false;
};

struct SpeedupRow {
  std::string network;
  std::string query;
  Threshold d = Threshold::infinite();
  double speedup = 0.0;  // toti wall time / titoto wall time
  int diameter = 0;
  std::size_t total_size = 0;  // order + size
};

struct BenchConfig {
  std::string network = "network";
  std::vector<QuerySpec> queries;
  std::vector<Threshold> schedule;
  std::vector<Strategy> strategies{Strategy::TopologyBeforeTime, Strategy::TimeAndTopologyTogether};
  std::size_t repeats = 3;
  std::size_t workers = 1;
  std::chrono::duration<double> cell_timeout{300.0};
  std::size_t max_fragments = 1'000'000;
};

/// Runs every (query, d, strategy) cell. Records come back ordered by query
/// position, then d, then strategy position, whatever the worker count.
std::vector<BenchRecord> run_bench(const TemporalGraph& host, const BenchConfig& config);

/// Elbow of the adjacent-delta curve as d_max, and its default schedule.
DSchedule auto_schedule(const TemporalGraph& host);

/// One row per (network, query, d) holding both a toti and a titoto record,
/// in descending speedup. `queries` supplies diameter and size; rows for
/// unknown query ids are skipped.
std::vector<SpeedupRow> speedup_rows(const std::vector<BenchRecord>& records,
                                     const std::vector<QuerySpec>& queries);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);
void write_speedup_csv(std::ostream& out, const std::vector<SpeedupRow>& rows);
/// Throws ParseError on a bad header or row.
std::vector<BenchRecord> read_bench_csv(std::istream& in);

struct PredictorRow {
  std::string network;
  std::string query;
  Threshold d = Threshold::infinite();
  double speedup = 0.0;
  std::uint64_t spurious = 0;  // taken from the toti record
  int diameter = 0;
  std::size_t total_size = 0;
};

struct PredictorReport {
  std::vector<PredictorRow> rows;
  std::vector<std::string> incomplete;  // "network/query/d: missing titoto"
  // Spearman rank correlation of each predictor with speedup; NaN when undefined.
  double rho_spurious = 0.0;
  double rho_diameter = 0.0;
  double rho_total_size = 0.0;
};

PredictorReport predictor_report(const std::vector<BenchRecord>& records,
                                 const std::vector<QuerySpec>& queries);
void write_predictor_csv(std::ostream& out, const PredictorReport& report);

/// Average ranks for ties. NaN if fewer than two points or a constant column.
double spearman(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace tempiso
