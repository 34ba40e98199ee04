#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempiso/query_graph.hpp"

namespace tempiso {

enum class QueryFamily { Named, Random };

struct QuerySpec {
  std::string id;    // q01..q30
  std::string name;  // short handle, e.g. "fan_out_fan_in"
  QueryGraph graph;
  QueryFamily family = QueryFamily::Named;
  std::string descriptor;
};

inline constexpr std::uint64_t kDefaultCatalogSeed = 42;
inline constexpr std::size_t kCatalogSize = 30;

/// Two source-to-sink directed paths of `hops` edges each, sharing only the
/// endpoints.
QueryGraph fan_out_fan_in(std::size_t paths, std::size_t hops);

/// Hand-specified motifs, ids q01.. in a fixed order.
std::vector<QuerySpec> named_queries();

/// Seeded random DAG queries of order 3..8, numbered after `first_index`.
/// Orders are assigned so that, together with `existing`, each order 3..8
/// appears as evenly as possible; no result is isomorphic to another result
/// or to a member of `existing`.
std::vector<QuerySpec> random_queries(std::uint64_t seed, std::size_t count,
                                      const std::vector<QuerySpec>& existing = {},
                                      std::size_t first_index = 0);

/// named_queries() followed by random_queries(seed, 30 - |named|).
std::vector<QuerySpec> default_catalog(std::uint64_t seed = kDefaultCatalogSeed);

/// Looks up by id ("q04") or name ("cycle_3").
std::optional<QuerySpec> find_query(const std::vector<QuerySpec>& catalog, std::string_view key);

/// Order bounds, weak connectivity, and the path-composition rule: acyclic,
/// except for named cycle entries.
bool satisfies_query_invariants(const QuerySpec& spec);

bool are_isomorphic(const QueryGraph& a, const QueryGraph& b);

}  // namespace tempiso
