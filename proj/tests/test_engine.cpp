#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tempiso/catalog.hpp"
#include "tempiso/engine.hpp"
#include "tempiso/oracle.hpp"

using namespace tempiso;
using fixtures::graph;
using fixtures::mappings;

namespace {

Threshold fin(Duration v) { return Threshold::finite(v); }

const QueryGraph kEdge = QueryGraph::from_edges(2, {{0, 1}});
const QueryGraph kPath3 = QueryGraph::from_edges(3, {{0, 1}, {1, 2}});
const QueryGraph kCycle3 = QueryGraph::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
const QueryGraph kFeedForward = QueryGraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});

std::vector<NodeId> by_label(const TemporalGraph& g, std::initializer_list<const char*> labels) {
  std::vector<NodeId> out;
  for (const char* l : labels) out.push_back(g.find(l).value());
  return out;
}

}  // namespace

TEST(MatchStatic, SingleEdge) {
  const auto g = graph({{"1", "2", 5}});
  const auto r = match_static(g, kEdge);
  ASSERT_EQ(r.embeddings.size(), 1u);
  EXPECT_EQ(r.embeddings[0].mapping, by_label(g, {"1", "2"}));
  EXPECT_EQ(r.stats.candidates, 1u);
  EXPECT_EQ(r.stats.spurious, 0u);
}

TEST(MatchStatic, ParallelInteractionsAreNotInduced) {
  EXPECT_TRUE(match_static(graph({{"1", "2", 5}, {"1", "2", 9}}), kEdge).embeddings.empty());
}

TEST(MatchStatic, ReverseInteractionBreaksInducedness) {
  EXPECT_TRUE(match_static(graph({{"1", "2", 5}, {"2", "1", 9}}), kEdge).embeddings.empty());
}

TEST(MatchStatic, CycleRotations) {
  const auto g = graph({{"1", "2", 0}, {"2", "3", 1}, {"3", "1", 2}});
  const auto r = match_static(g, kCycle3);
  // Without a temporal filter the three rotations are all induced matches.
  const std::vector<std::vector<NodeId>> rotations{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  EXPECT_EQ(mappings(r.embeddings), rotations);
  EXPECT_EQ(r.stats.candidates, 3u);
}

TEST(MatchStatic, DisconnectedQueryIsRejected) {
  const QueryGraph split = QueryGraph::from_edges(4, {{0, 1}, {2, 3}});
  const auto g = graph({{"1", "2", 0}});
  EXPECT_THROW(match_static(g, split), std::invalid_argument);
  EXPECT_THROW(match_time_and_topology(g, split, fin(1)), std::invalid_argument);
  EXPECT_THROW(match_time_then_topology(g, split, fin(1)), std::invalid_argument);
}

TEST(MatchStatic, QueryLargerThanHostHasNoMatches) {
  EXPECT_TRUE(match_static(graph({{"1", "2", 0}}), kPath3).embeddings.empty());
  EXPECT_TRUE(match_static(TemporalGraph{}, kEdge).embeddings.empty());
}

TEST(TopologyThenTime, TwoHopWindow) {
  const auto g = graph({{"1", "2", 0}, {"2", "3", 10}});
  auto r = match_topology_then_time(g, kPath3, fin(5));
  EXPECT_TRUE(r.embeddings.empty());
  EXPECT_EQ(r.stats.candidates, 1u);
  EXPECT_EQ(r.stats.spurious, 1u);

  r = match_topology_then_time(g, kPath3, fin(10));
  EXPECT_EQ(r.embeddings.size(), 1u);
  EXPECT_EQ(r.stats.spurious, 0u);
}

TEST(TimeAndTopology, PrunesBeforeCompletingTheMatch) {
  const auto g = graph({{"1", "2", 0}, {"2", "3", 10}});
  const auto toti = match_topology_then_time(g, kPath3, fin(5));
  const auto titoto = match_time_and_topology(g, kPath3, fin(5));
  EXPECT_TRUE(titoto.embeddings.empty());
  // Hand count: query node 0 fits host 1 and 2, node 1 then fits 2 below 1,
  // and only To-Ti goes on to place node 2 on host 3.
  EXPECT_EQ(toti.stats.states_expanded, 4u);
  EXPECT_EQ(titoto.stats.states_expanded, 3u);
  EXPECT_LT(titoto.stats.states_expanded, toti.stats.states_expanded);
  EXPECT_EQ(titoto.stats.spurious, 0u);
}

TEST(TimeAndTopology, ChainWithLargeGaps) {
  // Every depth-1 and depth-2 state holds at most one interaction, so nothing
  // can be pruned before depth 3: L-1 states at depth 1, L-2 at depth 2.
  for (std::size_t length : {3u, 5u, 10u, 40u}) {
    const auto g = fixtures::chain(length, 100);
    const auto titoto = match_time_and_topology(g, kPath3, fin(1));
    const auto toti = match_topology_then_time(g, kPath3, fin(1));
    EXPECT_TRUE(titoto.embeddings.empty());
    EXPECT_EQ(titoto.stats.states_expanded, 2 * length - 3) << "length " << length;
    EXPECT_EQ(toti.stats.states_expanded, 3 * length - 5) << "length " << length;
    EXPECT_EQ(toti.stats.spurious, length - 2);
  }
}

TEST(TimeAndTopology, RevalidatesAlreadyMappedNeighbours) {
  // Fan-in at z: the window violation only shows at z, which is mapped
  // before the second source is.
  const QueryGraph fan_in = QueryGraph::from_edges(3, {{0, 2}, {1, 2}});
  const auto g = graph({{"x", "z", 0}, {"y", "z", 50}});
  EXPECT_TRUE(match_time_and_topology(g, fan_in, fin(10)).embeddings.empty());
  EXPECT_EQ(match_time_and_topology(g, fan_in, fin(50)).embeddings.size(), 2u);
}

TEST(BruteForce, SingleEdgeInfinite) {
  const auto g = graph({{"1", "2", 5}});
  const auto r = enumerate_bruteforce(g, kEdge, Threshold::infinite());
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].mapping, by_label(g, {"1", "2"}));
}

TEST(BruteForce, TimedCycleHasNoTimeRespectingRotation) {
  // Each rotation covers all three interactions, and node 1 always sees its
  // outgoing interaction (time 0) before the incoming one (time 2). The three
  // reflections fail on topology.
  const auto g = graph({{"1", "2", 0}, {"2", "3", 1}, {"3", "1", 2}});
  EXPECT_TRUE(enumerate_bruteforce(g, kCycle3, fin(2)).empty());
  EXPECT_TRUE(enumerate_bruteforce(g, kCycle3, Threshold::infinite()).empty());
  EXPECT_TRUE(oracle::embeddings(g, kCycle3, fin(2)).empty());

  const auto flat = graph({{"1", "2", 4}, {"2", "3", 4}, {"3", "1", 4}});
  EXPECT_EQ(enumerate_bruteforce(flat, kCycle3, fin(0)).size(), 3u);
}

TEST(BruteForce, RefusesLargeHosts) {
  TemporalGraph::Builder b;
  for (int i = 0; i < 16; ++i) b.add_interaction(std::to_string(i), std::to_string(i + 1), i);
  const auto g = std::move(b).build();
  EXPECT_THROW(enumerate_bruteforce(g, kEdge, fin(1)), std::invalid_argument);
}

TEST(Strategies, TwoRegionFixtureYieldsTwoEmbeddings) {
  const auto g = fixtures::two_regions();
  const auto expected = oracle::embeddings(g, kFeedForward, fin(4));
  ASSERT_EQ(expected.size(), 2u);
  for (Strategy s : {Strategy::TopologyBeforeTime, Strategy::TimeAndTopologyTogether,
                     Strategy::TimeBeforeTopology}) {
    const auto r = match(s, g, kFeedForward, fin(4));
    EXPECT_EQ(mappings(r.embeddings), expected) << strategy_name(s);
  }
  const auto toti = match_topology_then_time(g, kFeedForward, fin(4));
  EXPECT_EQ(toti.stats.candidates, 3u);
  EXPECT_EQ(toti.stats.spurious, 1u);
}

TEST(Strategies, TimeBeforeTopologyCountsDuplicates) {
  const auto r = match_time_then_topology(fixtures::two_regions(), kFeedForward, fin(4));
  EXPECT_EQ(r.embeddings.size(), 2u);
  EXPECT_GT(r.stats.candidates, r.embeddings.size());
  EXPECT_EQ(r.stats.candidates, r.embeddings.size() + r.stats.duplicates);
  EXPECT_GE(r.stats.fragments, 2u);
}

TEST(Strategies, FragmentMatchesAreCheckedAgainstTheFullHost) {
  // The parallel 2->3 at time 90 conflicts with the rest, so the fragment
  // {1->2, 2->3@1} looks like a clean path, but the host pair 2->3 holds two
  // interactions.
  const auto g = graph({{"1", "2", 0}, {"2", "3", 1}, {"2", "3", 90}});
  EXPECT_TRUE(match_time_then_topology(g, kPath3, fin(5)).embeddings.empty());
  EXPECT_TRUE(match_topology_then_time(g, kPath3, fin(5)).embeddings.empty());
}

TEST(Strategies, EquivalentOnRandomHosts) {
  const auto catalog = default_catalog();
  std::mt19937_64 rng(5150);
  std::size_t nonempty = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_host(rng(), 9, 24, 60);
    for (const auto& q : catalog) {
      if (q.graph.order() > 4) continue;
      for (Threshold d : {fin(0), fin(3), fin(15), Threshold::infinite()}) {
        const auto expected = oracle::embeddings(g, q.graph, d);
        nonempty += expected.empty() ? 0 : 1;
        for (Strategy s : {Strategy::TopologyBeforeTime, Strategy::TimeAndTopologyTogether,
                           Strategy::TimeBeforeTopology}) {
          ASSERT_EQ(mappings(match(s, g, q.graph, d).embeddings), expected)
              << "trial " << trial << " query " << q.id << " d=" << d.to_string() << " " << strategy_name(s);
        }
        ASSERT_EQ(mappings(enumerate_bruteforce(g, q.graph, d)), expected);
      }
    }
  }
  EXPECT_GT(nonempty, 50u);  // the fixtures must exercise non-trivial cases
}

TEST(Strategies, ResultsAreSound) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_host(rng(), 10, 30, 40);
    for (const auto& q : {kPath3, kFeedForward, kCycle3}) {
      const auto r = match_time_and_topology(g, q, fin(10));
      for (const auto& e : r.embeddings) {
        for (NodeId p = 0; p < q.order(); ++p) {
          for (NodeId s = 0; s < q.order(); ++s) {
            if (p == s) continue;
            EXPECT_EQ(g.induced_count(e.mapping[p], e.mapping[s]), q.has_edge(p, s) ? 1u : 0u);
          }
        }
        std::vector<Interaction> xs;
        for (InteractionId id : e.induced) xs.push_back(g.interaction(id));
        EXPECT_EQ(xs.size(), q.size());
        EXPECT_TRUE(oracle::set_ok(xs, fin(10)));
      }
    }
  }
}

TEST(Strategies, DominanceAndMonotonicity) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_host(rng(), 12, 30, 80);
    for (const auto& q : {kPath3, kFeedForward, kCycle3, QueryGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}})}) {
      std::vector<std::vector<NodeId>> previous;
      for (Duration d : {0, 2, 5, 10, 40, 80}) {
        const auto toti = match_topology_then_time(g, q, fin(d));
        const auto titoto = match_time_and_topology(g, q, fin(d));
        EXPECT_LE(titoto.stats.states_expanded, toti.stats.states_expanded);
        EXPECT_EQ(titoto.stats.spurious, 0u);
        EXPECT_EQ(toti.stats.spurious, toti.stats.candidates - toti.embeddings.size());
        const auto current = mappings(titoto.embeddings);
        EXPECT_TRUE(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
        previous = current;
      }
    }
  }
}

TEST(Strategies, StaticReductionOnTimeRespectingHost) {
  // Times strictly increase along a topological order, so every node sees
  // all its inputs before its outputs.
  const auto g = graph({{"a", "b", 1}, {"a", "c", 2}, {"b", "c", 3}, {"c", "d", 4}, {"b", "d", 5}, {"d", "e", 9}});
  for (const auto& q : {kPath3, kFeedForward}) {
    EXPECT_EQ(mappings(match_topology_then_time(g, q, Threshold::infinite()).embeddings),
              mappings(match_static(g, q).embeddings));
  }
}

TEST(Strategies, StaticStrategyIgnoresThreshold) {
  const auto g = graph({{"1", "2", 0}, {"2", "3", 100}});
  EXPECT_EQ(match(Strategy::Static, g, kPath3, fin(0)).embeddings.size(), 1u);
}

TEST(Strategies, DeadlineStopsTheSearch) {
  TemporalGraph::Builder b;
  for (int i = 0; i < 300; ++i) {
    for (int j = 1; j <= 8; ++j) b.add_interaction(std::to_string(i), std::to_string(i + j), 0);
  }
  const auto g = std::move(b).build();
  SearchOptions options;
  options.deadline = std::chrono::steady_clock::now();
  const auto r = match_time_and_topology(g, fan_out_fan_in(2, 3), Threshold::infinite(), options);
  EXPECT_TRUE(r.stats.timed_out);
}

TEST(StrategyNames, RoundTrip) {
  for (Strategy s : {Strategy::Static, Strategy::TopologyBeforeTime, Strategy::TimeAndTopologyTogether,
                     Strategy::TimeBeforeTopology}) {
    EXPECT_EQ(parse_strategy(strategy_name(s)), s);
  }
  EXPECT_THROW(parse_strategy("fast"), std::invalid_argument);
}
