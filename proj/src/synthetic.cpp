#include "tempiso/synthetic.hpp"

#include <random>
#include <string>

namespace tempiso {
namespace {

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

TemporalGraph random_temporal_graph(std::uint64_t seed, std::size_t order, std::size_t size,
                                    Timestamp max_time) {
  if (order < 2) throw std::invalid_argument("random_temporal_graph needs at least two nodes");
  std::mt19937_64 rng(seed);
  TemporalGraph::Builder b;
  for (std::size_t i = 0; i < size; ++i) {
    const auto s = draw(rng, order);
    auto t = draw(rng, order - 1);
    if (t >= s) ++t;
    const auto time = static_cast<Timestamp>(draw(rng, static_cast<std::uint64_t>(max_time) + 1));
    b.add_interaction(std::to_string(s), std::to_string(t), time);
  }
  return std::move(b).build();
}

TemporalGraph chain_graph(std::size_t nodes, Timestamp gap) {
  TemporalGraph::Builder b;
  for (std::size_t i = 0; i + 1 < nodes; ++i) {
    b.add_interaction(std::to_string(i), std::to_string(i + 1), static_cast<Timestamp>(i) * gap);
  }
  return std::move(b).build();
}

TemporalGraph ranked_flow_network(std::uint64_t seed, const FlowNetworkParams& params) {
  if (params.nodes <= params.reach || params.reach == 0) {
    throw std::invalid_argument("ranked_flow_network needs nodes > reach > 0");
  }
  std::mt19937_64 rng(seed);
  TemporalGraph::Builder b;
  for (std::size_t i = 0; i < params.interactions; ++i) {
    const auto u = draw(rng, params.nodes - params.reach);
    const auto v = u + 1 + draw(rng, params.reach);
    const auto time = static_cast<Timestamp>(draw(rng, static_cast<std::uint64_t>(params.time_span)));
    const bool flip = params.backward_fraction > 0 && (rng() % 1000000) < params.backward_fraction * 1000000;
    if (flip) {
      b.add_interaction(std::to_string(v), std::to_string(u), time);
    } else {
      b.add_interaction(std::to_string(u), std::to_string(v), time);
    }
  }
  return std::move(b).build();
}

}  // namespace tempiso
