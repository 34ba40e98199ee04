#include "tempiso/catalog.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <numeric>
#include <random>

#include "tempiso/engine.hpp"

namespace tempiso {
namespace {

constexpr std::size_t kMinOrder = 3;
constexpr std::size_t kMaxOrder = 8;
constexpr std::size_t kMaxAttempts = 100000;

std::string query_id(std::size_t index) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "q%02zu", index + 1);
  return buf;
}

QuerySpec named(std::size_t index, std::string name, QueryGraph g, std::string descriptor) {
  return {query_id(index), std::move(name), std::move(g), QueryFamily::Named, std::move(descriptor)};
}

// Chosen with std::mt19937_64, whose output sequence is fixed by the standard;
// the distribution is done by hand so the catalog is identical everywhere.
std::size_t draw(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

QueryGraph random_dag(std::mt19937_64& rng, std::size_t order) {
  std::vector<std::size_t> rank(order);
  std::iota(rank.begin(), rank.end(), 0);
  for (std::size_t i = order; i > 1; --i) std::swap(rank[i - 1], rank[draw(rng, i)]);

  std::vector<char> present(order * order, 0);
  std::vector<QueryGraph::Edge> edges;
  auto add = [&](std::size_t a, std::size_t b) {
    if (rank[a] > rank[b]) std::swap(a, b);
    if (present[a * order + b]) return;
    present[a * order + b] = 1;
    edges.emplace_back(static_cast<NodeId>(a), static_cast<NodeId>(b));
  };
  for (std::size_t j = 1; j < order; ++j) add(draw(rng, j), j);
  const std::size_t extra = draw(rng, std::min<std::size_t>(3, order - 2) + 1);
  for (std::size_t e = 0; e < extra; ++e) {
    const std::size_t a = draw(rng, order);
    const std::size_t b = draw(rng, order);
    if (a != b) add(a, b);
  }
  std::sort(edges.begin(), edges.end());
  return QueryGraph::from_edges(order, std::move(edges));
}

bool every_edge_on_source_sink_path(const QueryGraph& g) {
  const std::size_t k = g.order();
  std::vector<char> from_source(k, 0), to_sink(k, 0);
  std::vector<NodeId> stack;
  for (NodeId p = 0; p < k; ++p) {
    if (g.predecessors(p).empty()) {
      from_source[p] = 1;
      stack.push_back(p);
    }
  }
  while (!stack.empty()) {
    const NodeId p = stack.back();
    stack.pop_back();
    for (NodeId q : g.successors(p)) {
      if (!from_source[q]) {
        from_source[q] = 1;
        stack.push_back(q);
      }
    }
  }
  for (NodeId p = 0; p < k; ++p) {
    if (g.successors(p).empty()) {
      to_sink[p] = 1;
      stack.push_back(p);
    }
  }
  while (!stack.empty()) {
    const NodeId p = stack.back();
    stack.pop_back();
    for (NodeId q : g.predecessors(p)) {
      if (!to_sink[q]) {
        to_sink[q] = 1;
        stack.push_back(q);
      }
    }
  }
  for (const auto& [a, b] : g.edges()) {
    if (!from_source[a] || !to_sink[b]) return false;
  }
  return true;
}

}  // namespace

QueryGraph fan_out_fan_in(std::size_t paths, std::size_t hops) {
  if (paths < 1 || hops < 1) throw std::invalid_argument("fan_out_fan_in needs paths >= 1 and hops >= 1");
  if (hops == 1 && paths > 1) throw std::invalid_argument("parallel one-hop paths would repeat an edge");
  const std::size_t order = 2 + paths * (hops - 1);
  const auto sink = static_cast<NodeId>(order - 1);
  std::vector<QueryGraph::Edge> edges;
  NodeId next = 1;
  for (std::size_t p = 0; p < paths; ++p) {
    NodeId prev = 0;
    for (std::size_t h = 1; h < hops; ++h) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, sink);
  }
  return QueryGraph::from_edges(order, std::move(edges));
}

std::vector<QuerySpec> named_queries() {
  std::vector<QuerySpec> out;
  out.push_back(named(0, "fan_out_fan_in", fan_out_fan_in(2, 3),
                      "fan-out-fan-in: two directed paths of three hops from one source to one sink"));
  out.push_back(named(1, "feed_forward", QueryGraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}),
                      "feed-forward motif x->y, x->z, y->z"));
  out.push_back(named(2, "fan_out_into_feed_forward",
                      QueryGraph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {2, 4}, {3, 4}}),
                      "reconstruction: fan-out to three nodes, two of which feed forward into a fourth"));
  out.push_back(named(3, "cycle_3", QueryGraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}),
                      "directed 3-clique (cycle); exempt from the path rule"));
  out.push_back(named(4, "path_3", QueryGraph::from_edges(3, {{0, 1}, {1, 2}}), "directed path on 3 nodes"));
  out.push_back(named(5, "path_4", QueryGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}}),
                      "directed path on 4 nodes"));
  return out;
}

bool are_isomorphic(const QueryGraph& a, const QueryGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return !match_static(b.as_temporal(), a).embeddings.empty();
}

std::vector<QuerySpec> random_queries(std::uint64_t seed, std::size_t count,
                                      const std::vector<QuerySpec>& existing, std::size_t first_index) {
  std::mt19937_64 rng(seed);

  std::array<std::size_t, kMaxOrder + 1> histogram{};
  for (const auto& q : existing) {
    if (q.graph.order() <= kMaxOrder) ++histogram[q.graph.order()];
  }
  std::vector<std::size_t> orders;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t best = kMinOrder;
    for (std::size_t o = kMinOrder; o <= kMaxOrder; ++o) {
      if (histogram[o] < histogram[best]) best = o;
    }
    ++histogram[best];
    orders.push_back(best);
  }
  for (std::size_t i = orders.size(); i > 1; --i) std::swap(orders[i - 1], orders[draw(rng, i)]);

  std::vector<QuerySpec> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t order = orders[i];
    bool placed = false;
    for (std::size_t attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
      QueryGraph g = random_dag(rng, order);
      auto clashes = [&](const QuerySpec& other) { return are_isomorphic(g, other.graph); };
      if (std::any_of(existing.begin(), existing.end(), clashes) ||
          std::any_of(out.begin(), out.end(), clashes)) {
        continue;
      }
      const std::size_t size = g.size();
      QuerySpec spec{query_id(first_index + i), "random_" + std::to_string(i + 1), std::move(g),
                     QueryFamily::Random,
                     "random DAG (seed " + std::to_string(seed) + "), order " + std::to_string(order) +
                         ", size " + std::to_string(size)};
      if (!satisfies_query_invariants(spec)) continue;
      out.push_back(std::move(spec));
      placed = true;
    }
    if (!placed) {
      throw std::runtime_error("could not draw a new non-isomorphic query of order " + std::to_string(order));
    }
  }
  return out;
}

std::vector<QuerySpec> default_catalog(std::uint64_t seed) {
  auto catalog = named_queries();
  const std::size_t named_count = catalog.size();
  auto randoms = random_queries(seed, kCatalogSize - named_count, catalog, named_count);
  for (auto& q : randoms) catalog.push_back(std::move(q));
  return catalog;
}

std::optional<QuerySpec> find_query(const std::vector<QuerySpec>& catalog, std::string_view key) {
  for (const auto& q : catalog) {
    if (q.id == key || q.name == key) return q;
  }
  return std::nullopt;
}

bool satisfies_query_invariants(const QuerySpec& spec) {
  const QueryGraph& g = spec.graph;
  if (g.order() < kMinOrder || g.order() > kMaxOrder) return false;
  if (!g.is_weakly_connected()) return false;
  if (g.is_acyclic() || every_edge_on_source_sink_path(g)) return true;
  return spec.family == QueryFamily::Named && spec.name == "cycle_3";
}

}  // namespace tempiso
