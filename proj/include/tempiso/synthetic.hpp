#pragma once

#include <cstdint>

#include "tempiso/temporal_graph.hpp"

namespace tempiso {

/// `size` interactions between uniformly drawn distinct endpoints in
/// 0..order-1 at uniform times in [0, max_time]. Nodes are labelled by number.
TemporalGraph random_temporal_graph(std::uint64_t seed, std::size_t order, std::size_t size,
                                    Timestamp max_time);

/// 0 -> 1 -> ... -> nodes-1, the i-th hop at time i * gap.
TemporalGraph chain_graph(std::size_t nodes, Timestamp gap);

struct FlowNetworkParams {
  std::size_t nodes = 1000;
  std::size_t interactions = 5000;
  std::size_t reach = 10;           // targets lie 1..reach ranks ahead of the source
  double backward_fraction = 0.0;   // share of interactions pointing back in rank
  Timestamp time_span = 1'000'000;  // times uniform in [0, time_span)
};

/// Rank-ordered network: edges mostly point forward between nearby ranks, so
/// path- and fan-shaped patterns abound statically while uniform random times
/// make few of them time-respecting at small thresholds.
TemporalGraph ranked_flow_network(std::uint64_t seed, const FlowNetworkParams& params);

}  // namespace tempiso
