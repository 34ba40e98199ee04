#include "tempiso/engine.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "extraction_impl.hpp"
#include "vf2_search.hpp"

namespace tempiso {
namespace {

using Clock = std::chrono::steady_clock;

void require_connected(const QueryGraph& query) {
  if (query.order() == 0 || !query.is_weakly_connected()) {
    throw std::invalid_argument("query graph must be weakly connected");
  }
}

Embedding make_embedding(const TemporalGraph& host, const QueryGraph& query,
                         std::span<const NodeId> mapping) {
  Embedding e;
  e.mapping.assign(mapping.begin(), mapping.end());
  e.induced = induced_interactions(host, query, mapping);
  return e;
}

struct MappingHash {
  std::size_t operator()(const std::vector<NodeId>& m) const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(m.data()), m.size() * sizeof(NodeId)));
  }
};

template <class OnMatch>
MatchResult run_search(const TemporalGraph& host, const QueryGraph& query,
                       std::optional<Threshold> temporal, const SearchOptions& options,
                       OnMatch&& on_match) {
  require_connected(query);
  MatchResult result;
  const auto start = Clock::now();
  detail::Vf2Search search(host, query, temporal, {}, options.deadline);
  const bool finished = search.run(
      [&](std::span<const NodeId> mapping) { on_match(mapping, result); }, result.stats);
  result.stats.timed_out = !finished;
  result.stats.wall_time = Clock::now() - start;
  return result;
}

}  // namespace

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Static:
      return "static";
    case Strategy::TopologyBeforeTime:
      return "toti";
    case Strategy::TimeAndTopologyTogether:
      return "titoto";
    case Strategy::TimeBeforeTopology:
      return "tbt";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "static") return Strategy::Static;
  if (name == "toti") return Strategy::TopologyBeforeTime;
  if (name == "titoto") return Strategy::TimeAndTopologyTogether;
  if (name == "tbt") return Strategy::TimeBeforeTopology;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

std::vector<InteractionId> induced_interactions(const TemporalGraph& host, const QueryGraph& query,
                                                std::span<const NodeId> mapping) {
  std::vector<InteractionId> ids;
  ids.reserve(query.size());
  const std::size_t k = mapping.size();
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      if (p == q) continue;
      auto run = host.pair_ids(mapping[p], mapping[q]);
      ids.insert(ids.end(), run.begin(), run.end());
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

MatchResult match_static(const TemporalGraph& host, const QueryGraph& query,
                         const SearchOptions& options) {
  return run_search(host, query, std::nullopt, options,
                    [&](std::span<const NodeId> mapping, MatchResult& r) {
                      ++r.stats.candidates;
                      r.embeddings.push_back(make_embedding(host, query, mapping));
                    });
}

MatchResult match_topology_then_time(const TemporalGraph& host, const QueryGraph& query, Threshold d,
                                     const SearchOptions& options) {
  std::vector<Interaction> scratch;
  return run_search(host, query, std::nullopt, options,
                    [&](std::span<const NodeId> mapping, MatchResult& r) {
                      ++r.stats.candidates;
                      Embedding e = make_embedding(host, query, mapping);
                      scratch.clear();
                      for (InteractionId id : e.induced) scratch.push_back(host.interaction(id));
                      if (embedding_time_respecting(scratch, d)) {
                        r.embeddings.push_back(std::move(e));
                      } else {
                        ++r.stats.spurious;
                      }
                    });
}

MatchResult match_time_and_topology(const TemporalGraph& host, const QueryGraph& query, Threshold d,
                                    const SearchOptions& options) {
  return run_search(host, query, d, options, [&](std::span<const NodeId> mapping, MatchResult& r) {
    ++r.stats.candidates;
    r.embeddings.push_back(make_embedding(host, query, mapping));
  });
}

MatchResult match_time_then_topology(const TemporalGraph& host, const QueryGraph& query, Threshold d,
                                     const SearchOptions& options) {
  require_connected(query);
  MatchResult result;
  const auto start = Clock::now();

  ExtractOptions extract;
  extract.max_sets = options.max_fragments;
  extract.deadline = options.deadline;
  bool extraction_finished = true;
  const auto fragments = detail::extract_complete(host, d, extract, &extraction_finished);
  result.stats.fragments = fragments.size();

  std::unordered_set<std::vector<NodeId>, MappingHash> seen;
  std::vector<NodeId> node_map;
  std::vector<NodeId> host_mapping(query.order());
  bool finished = extraction_finished;
  for (const auto& fragment : fragments) {
    if (!finished) break;
    if (fragment.size() < query.size()) continue;
    const TemporalGraph piece = host.subgraph(fragment, &node_map);
    if (piece.order() < query.order()) continue;
    detail::Vf2Search search(piece, query, std::nullopt, {&host, node_map}, options.deadline);
    finished = search.run(
        [&](std::span<const NodeId> mapping) {
          ++result.stats.candidates;
          for (std::size_t p = 0; p < mapping.size(); ++p) host_mapping[p] = node_map[mapping[p]];
          if (seen.insert(host_mapping).second) {
            result.embeddings.push_back(make_embedding(host, query, host_mapping));
          } else {
            ++result.stats.duplicates;
          }
        },
        result.stats);
  }
  std::sort(result.embeddings.begin(), result.embeddings.end());
  result.stats.timed_out = !finished;
  result.stats.wall_time = Clock::now() - start;
  return result;
}

MatchResult match(Strategy strategy, const TemporalGraph& host, const QueryGraph& query, Threshold d,
                  const SearchOptions& options) {
  switch (strategy) {
    case Strategy::Static:
      return match_static(host, query, options);
    case Strategy::TopologyBeforeTime:
      return match_topology_then_time(host, query, d, options);
    case Strategy::TimeAndTopologyTogether:
      return match_time_and_topology(host, query, d, options);
    case Strategy::TimeBeforeTopology:
      return match_time_then_topology(host, query, d, options);
  }
  throw std::invalid_argument("unknown strategy");
}

}  // namespace tempiso
