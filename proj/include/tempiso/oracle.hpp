#pragma once

// Reference implementations used to cross-check the search strategies.

#include <span>
#include <vector>

#include "tempiso/engine.hpp"

namespace tempiso {

/// Every adjacent pair of `sub` satisfies pair_time_respecting.
bool embedding_time_respecting_pairwise(std::span<const Interaction> sub, Threshold d);

/// All injective maps query -> host with exact induced pair counts whose
/// induced interactions are pairwise time-respecting, ordered by mapping.
/// Refuses hosts with more than `max_order` nodes (std::invalid_argument).
std::vector<Embedding> enumerate_bruteforce(const TemporalGraph& host, const QueryGraph& query,
                                            Threshold d, std::size_t max_order = 15);

}  // namespace tempiso
