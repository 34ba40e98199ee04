#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tempiso/constraints.hpp"
#include "tempiso/oracle.hpp"

using namespace tempiso;

namespace {

constexpr NodeId a = 0, b = 1, c = 2, d = 3, n = 4;

Threshold fin(Duration v) { return Threshold::finite(v); }

bool check(std::vector<Interaction> s, Threshold t) { return embedding_time_respecting(s, t); }

}  // namespace

TEST(Threshold, OrderingAndValidation) {
  EXPECT_LT(fin(5), Threshold::infinite());
  EXPECT_LT(fin(1), fin(2));
  EXPECT_EQ(fin(3), fin(3));
  EXPECT_THROW(fin(-1), std::invalid_argument);
  EXPECT_THROW(Threshold::infinite().value(), std::logic_error);
  EXPECT_TRUE(Threshold::infinite().admits(1'000'000'000'000));
  EXPECT_FALSE(fin(4).admits(5));
}

TEST(PairTimeRespecting, HeadToTail) {
  EXPECT_TRUE(pair_time_respecting({a, b, 10}, {b, c, 12}, fin(5)));
  EXPECT_FALSE(pair_time_respecting({a, b, 10}, {b, c, 8}, fin(5)));
  // The same pair seen from the other side.
  EXPECT_TRUE(pair_time_respecting({b, c, 12}, {a, b, 10}, fin(5)));
  EXPECT_FALSE(pair_time_respecting({b, c, 8}, {a, b, 10}, fin(5)));
  EXPECT_TRUE(pair_time_respecting({a, b, 10}, {b, c, 10}, fin(0)));
  EXPECT_FALSE(pair_time_respecting({a, b, 10}, {b, c, 16}, fin(5)));
}

TEST(PairTimeRespecting, SharedSourceBoundary) {
  EXPECT_FALSE(pair_time_respecting({a, b, 10}, {a, c, 14}, fin(3)));
  EXPECT_TRUE(pair_time_respecting({a, b, 10}, {a, c, 14}, fin(4)));
  EXPECT_TRUE(pair_time_respecting({a, c, 14}, {a, b, 10}, fin(4)));
  EXPECT_TRUE(pair_time_respecting({b, c, 14}, {a, c, 10}, fin(4)));  // shared target
}

TEST(PairTimeRespecting, OppositeDirectionsForceEqualTimes) {
  EXPECT_TRUE(pair_time_respecting({a, b, 7}, {b, a, 7}, fin(0)));
  EXPECT_FALSE(pair_time_respecting({a, b, 7}, {b, a, 8}, Threshold::infinite()));
  EXPECT_FALSE(pair_time_respecting({a, b, 8}, {b, a, 7}, Threshold::infinite()));
}

TEST(PairTimeRespecting, NonAdjacentIsAnError) {
  EXPECT_THROW(pair_time_respecting({a, b, 1}, {c, d, 1}, fin(5)), std::invalid_argument);
}

TEST(NodeWindow, Fig1StarHub) {
  const std::vector<Timestamp> times{0, 2, 3, 4};
  EXPECT_TRUE(node_window_ok(times, fin(4)));
  EXPECT_FALSE(node_window_ok(times, fin(3)));
  EXPECT_TRUE(node_window_ok({}, fin(0)));
  EXPECT_TRUE(node_window_ok(times, Threshold::infinite()));
}

TEST(NodePrecedence, Examples) {
  EXPECT_TRUE(node_precedence_ok(std::vector<Timestamp>{0, 2}, std::vector<Timestamp>{3, 4}));
  EXPECT_FALSE(node_precedence_ok(std::vector<Timestamp>{0, 5}, std::vector<Timestamp>{3, 4}));
  EXPECT_TRUE(node_precedence_ok(std::vector<Timestamp>{3}, std::vector<Timestamp>{3}));
  EXPECT_TRUE(node_precedence_ok({}, std::vector<Timestamp>{1}));
  EXPECT_TRUE(node_precedence_ok(std::vector<Timestamp>{9}, {}));
}

TEST(EmbeddingTimeRespecting, SmallCases) {
  EXPECT_TRUE(check({{a, b, 1}, {b, c, 2}}, fin(1)));
  EXPECT_FALSE(check({{a, b, 1}, {b, c, 2}}, fin(0)));
  EXPECT_TRUE(check({{a, b, 5}, {a, c, 5}}, fin(0)));
  EXPECT_TRUE(check({}, fin(0)));
}

TEST(EmbeddingTimeRespecting, Fig1Star) {
  const std::vector<Interaction> star{{a, n, 0}, {b, n, 2}, {n, c, 3}, {n, d, 4}};
  EXPECT_TRUE(check(star, fin(4)));
  EXPECT_FALSE(check(star, fin(3)));
  // An incoming interaction later than an outgoing one breaks precedence at
  // any threshold.
  const std::vector<Interaction> late{{a, n, 0}, {b, n, 3}, {n, c, 2}, {n, d, 4}};
  EXPECT_FALSE(check(late, fin(4)));
  EXPECT_FALSE(check(late, Threshold::infinite()));
}

TEST(EmbeddingTimeRespecting, FanOutFanIn) {
  // Source 0, paths 0->1->2->5 and 0->3->4->5.
  const std::vector<Interaction> s{{0, 1, 1}, {1, 2, 2}, {2, 5, 4}, {0, 3, 1}, {3, 4, 3}, {4, 5, 5}};
  for (Duration t : {0, 1, 2, 3, 4, 10}) {
    EXPECT_EQ(check(s, fin(t)), oracle::set_ok(s, fin(t))) << "d=" << t;
  }
  EXPECT_TRUE(check(s, fin(2)));
  EXPECT_FALSE(check(s, fin(1)));
}

TEST(EmbeddingTimeRespecting, InfiniteKeepsPrecedence) {
  EXPECT_TRUE(check({{a, b, 0}, {b, c, 1'000'000}}, Threshold::infinite()));
  EXPECT_FALSE(check({{a, b, 5}, {b, c, 1}}, Threshold::infinite()));
}

TEST(EmbeddingTimeRespecting, MatchesPairwiseDefinitionOnRandomSets) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t size = 1 + rng() % 12;
    const NodeId nodes = static_cast<NodeId>(2 + rng() % 6);
    const auto s = oracle::random_interactions(rng, size, nodes, 20);
    for (Threshold t : {fin(0), fin(1), fin(3), fin(7), fin(20), Threshold::infinite()}) {
      const bool expected = oracle::set_ok(s, t);
      ASSERT_EQ(embedding_time_respecting(s, t), expected) << "trial " << trial << " d=" << t.to_string();
      ASSERT_EQ(embedding_time_respecting_pairwise(s, t), expected);
    }
  }
}

TEST(EmbeddingTimeRespecting, MonotoneInThreshold) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto s = oracle::random_interactions(rng, 1 + rng() % 10, 5, 30);
    bool seen_true = false;
    for (Duration t = 0; t <= 31; ++t) {
      const bool ok = embedding_time_respecting(s, fin(t));
      if (seen_true) ASSERT_TRUE(ok);
      seen_true = seen_true || ok;
    }
    if (seen_true) ASSERT_TRUE(embedding_time_respecting(s, Threshold::infinite()));
  }
}
