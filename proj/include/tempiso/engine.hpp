#pragma once

#include <chrono>
#include <optional>
#include <string_view>
#include <vector>

#include "tempiso/constraints.hpp"
#include "tempiso/query_graph.hpp"
#include "tempiso/temporal_graph.hpp"

namespace tempiso {

enum class Strategy { Static, TopologyBeforeTime, TimeAndTopologyTogether, TimeBeforeTopology };

// "static", "toti", "titoto", "tbt"
std::string_view strategy_name(Strategy s);
Strategy parse_strategy(std::string_view name);

/// An induced, injective placement of a query in a host graph. Identity is the
/// mapping; `induced` holds the host interactions between mapped nodes.
struct Embedding {
  std::vector<NodeId> mapping;          // query node -> host node
  std::vector<InteractionId> induced;  // host interaction ids, ascending

  friend bool operator==(const Embedding& a, const Embedding& b) { return a.mapping == b.mapping; }
  friend bool operator<(const Embedding& a, const Embedding& b) { return a.mapping < b.mapping; }
};

struct SearchStats {
  std::uint64_t states_expanded = 0;  // partial mappings reached by a feasible extension
  std::uint64_t candidates = 0;       // full topological matches produced
  std::uint64_t spurious = 0;         // topological matches rejected on time
  std::uint64_t fragments = 0;        // time-before-topology: extracted subgraphs
  std::uint64_t duplicates = 0;       // time-before-topology: repeated matches dropped
  std::chrono::nanoseconds wall_time{0};
  bool timed_out = false;
};

struct SearchOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Time-before-topology aborts with ResourceLimitError past this many fragments.
  std::size_t max_fragments = 1'000'000;
};

struct MatchResult {
  std::vector<Embedding> embeddings;
  SearchStats stats;
};

MatchResult match_static(const TemporalGraph& host, const QueryGraph& query,
                         const SearchOptions& options = {});

/// Static search, then keep the time-respecting matches.
MatchResult match_topology_then_time(const TemporalGraph& host, const QueryGraph& query, Threshold d,
                                     const SearchOptions& options = {});

/// Static search with the temporal test applied at every extension.
MatchResult match_time_and_topology(const TemporalGraph& host, const QueryGraph& query, Threshold d,
                                    const SearchOptions& options = {});

/// Extract maximal time-respecting subgraphs, then match statically in each.
MatchResult match_time_then_topology(const TemporalGraph& host, const QueryGraph& query, Threshold d,
                                     const SearchOptions& options = {});

MatchResult match(Strategy strategy, const TemporalGraph& host, const QueryGraph& query, Threshold d,
                  const SearchOptions& options = {});

enum class ExtractionMode {
  // Every maximal connected time-respecting interaction set.
  Complete,
  // One breadth-first growth per interaction not yet covered.
  SeedCover,
};

struct ExtractOptions {
  ExtractionMode mode = ExtractionMode::Complete;
  std::size_t max_sets = 1'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Maximal time-respecting interaction sets (ids ascending within each set).
/// Interactions are adjacent when they share an endpoint; a set admits an
/// interaction only if it is time-respecting with every member it touches.
/// Throws ResourceLimitError past `max_sets`.
std::vector<std::vector<InteractionId>> extract_max_trs(const TemporalGraph& host, Threshold d,
                                                        const ExtractOptions& options = {});

/// Host interactions realizing the query edges under `mapping`.
std::vector<InteractionId> induced_interactions(const TemporalGraph& host, const QueryGraph& query,
                                                std::span<const NodeId> mapping);

}  // namespace tempiso
