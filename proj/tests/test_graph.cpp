#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "hamstar/enumerate.hpp"
#include "hamstar/errors.hpp"
#include "hamstar/families.hpp"
#include "hamstar/graph.hpp"
#include "oracles.hpp"

namespace hamstar {
namespace {

TEST(GraphTest, EdgesStaySymmetricAndIrreflexive) {
  Graph g(4, {{0, 1}, {1, 2}, {3, 1}});
  EXPECT_TRUE(g.well_formed());
  EXPECT_TRUE(g.adjacent(1, 3));
  EXPECT_TRUE(g.adjacent(3, 1));
  EXPECT_EQ(g.degree(1), 3);
  EXPECT_EQ(g.edge_count(), 3);
  g.remove_edge(1, 3);
  EXPECT_FALSE(g.adjacent(3, 1));
  EXPECT_TRUE(g.well_formed());
}

TEST(GraphTest, RejectsLoopsAndBadIndices) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), ArgumentError);
  EXPECT_THROW(g.add_edge(0, 3), ArgumentError);
  EXPECT_THROW(Graph(65), CapacityError);
  EXPECT_NO_THROW(Graph(64));
}

TEST(SigmaTest, Examples) {
  EXPECT_EQ(sigma_k(complete_bipartite(2, 4), 2), Sigma::finite(4));
  EXPECT_EQ(sigma_k(path_graph(3), 2), Sigma::finite(2));
  EXPECT_EQ(sigma_k(complete_graph(4), 2), Sigma::undefined());
  // Independence number of C_5 is 2 (checked against the subset oracle).
  EXPECT_FALSE(oracle::sigma_k(cycle_graph(5), 3).has_value());
  EXPECT_EQ(sigma_k(cycle_graph(5), 3), Sigma::undefined());
  EXPECT_EQ(sigma_k(cycle_graph(5), 1), Sigma::finite(2));
  EXPECT_EQ(sigma_k(complete_bipartite(2, 4), 3), Sigma::finite(6));
  EXPECT_EQ(sigma_k(join(complete_graph(3), empty_graph(5)), 3), Sigma::finite(9));
}

TEST(SigmaTest, KOutOfRange) {
  const Graph g = cycle_graph(5);
  EXPECT_THROW(sigma_k(g, 0), ArgumentError);
  EXPECT_THROW(sigma_k(g, 6), ArgumentError);
  EXPECT_NO_THROW(sigma_k(g, 5));
}

TEST(SigmaTest, MatchesSubsetOracleOnAllGraphsUpTo7) {
  GraphEnumerator all(GraphClass::All);
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : all.graphs(n)) {
      for (int k = 1; k <= n; ++k) {
        const auto expected = oracle::sigma_k(g, k);
        const Sigma got = sigma_k(g, k);
        ASSERT_EQ(got.is_finite(), expected.has_value()) << g << " k=" << k;
        if (expected) {
          ASSERT_EQ(got.value(), *expected) << g << " k=" << k;
          ASSERT_LE(got.value(), k * (n - 1));
        }
      }
    }
  }
}

TEST(SigmaTest, DegreeSumsGrowAtLeastProportionally) {
  GraphEnumerator all(GraphClass::All);
  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : all.graphs(n)) {
      for (int k = 1; k < n; ++k) {
        const Sigma lo = sigma_k(g, k);
        const Sigma hi = sigma_k(g, k + 1);
        if (!lo.is_finite() || !hi.is_finite()) continue;
        ASSERT_GE(k * hi.value(), (k + 1) * lo.value()) << g << " k=" << k;
      }
    }
  }
}

TEST(ThresholdTest, IntegerCrossMultiplication) {
  // K_{2,4}: 3*4 = 2*6, so only the non-strict form holds.
  EXPECT_FALSE(meets_ore_threshold(Sigma::finite(4), 6, 5, Threshold::Strict));
  EXPECT_TRUE(meets_ore_threshold(Sigma::finite(4), 6, 5, Threshold::NonStrict));
  EXPECT_TRUE(meets_ore_threshold(Sigma::finite(6), 8, 5, Threshold::Strict));
  EXPECT_TRUE(meets_ore_threshold(Sigma::undefined(), 8, 5, Threshold::Strict));
}

TEST(JoinTest, Examples) {
  EXPECT_EQ(join(empty_graph(2), empty_graph(4)), complete_bipartite(2, 4));
  EXPECT_EQ(complete_bipartite(2, 4).edge_count(), 8);
  const Graph star = join(empty_graph(1), empty_graph(5));
  EXPECT_EQ(star.degree(0), 5);
  for (Vertex v = 1; v <= 5; ++v) EXPECT_EQ(star.neighbors(v), bit(0));
  EXPECT_THROW(join(empty_graph(40), empty_graph(25)), CapacityError);
}

TEST(JoinTest, DegreeLaw) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 6, 0.5);
    const Graph h = oracle::random_graph(rng, 1 + trial % 5, 0.4);
    const Graph j = join(g, h);
    ASSERT_TRUE(j.well_formed());
    for (Vertex v = 0; v < g.order(); ++v) ASSERT_EQ(j.degree(v), g.degree(v) + h.order());
    for (Vertex w = 0; w < h.order(); ++w) {
      ASSERT_EQ(j.degree(g.order() + w), h.degree(w) + g.order());
    }
  }
  const Graph k3 = join(complete_graph(3), empty_graph(5));
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(k3.degree(v), 2 + 5);
}

TEST(FamilyTest, SharpnessFamily) {
  for (int t = 5; t <= 9; ++t) {
    const Graph g = sharpness_family(t);
    EXPECT_EQ(g, complete_bipartite(t - 3, t - 1));
    EXPECT_EQ(g.order(), 2 * t - 4);
    const Sigma s2 = sigma_k(g, 2);
    ASSERT_TRUE(s2.is_finite());
    EXPECT_EQ(s2.value(), 2 * (t - 3));
    EXPECT_EQ((t - 2) * s2.value(), (t - 3) * g.order());
  }
  EXPECT_EQ(sharpness_family(5).order(), 6);
  EXPECT_EQ(sharpness_family(6), complete_bipartite(3, 5));
  EXPECT_EQ(sharpness_family(7), complete_bipartite(4, 6));
  EXPECT_THROW(sharpness_family(4), ArgumentError);
}

TEST(FamilyTest, EqualityFamily) {
  EXPECT_EQ(equality_family(empty_graph(2), 5), complete_bipartite(2, 4));
  const Graph g = equality_family(complete_graph(2), 5);
  EXPECT_EQ(g.order(), 6);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_EQ(sigma_k(g, 2), Sigma::finite(4));
  EXPECT_EQ(equality_family(empty_graph(3), 6), complete_bipartite(3, 5));
  EXPECT_THROW(equality_family(empty_graph(3), 5), ArgumentError);
}

TEST(ConnectivityTest, Examples) {
  EXPECT_TRUE(is_connected(complete_bipartite(2, 4)));
  EXPECT_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_TRUE(is_connected(Graph(0)));
  EXPECT_FALSE(is_connected(Graph(2)));
}

TEST(IndependentSetTest, Examples) {
  const Graph k24 = complete_bipartite(2, 4);
  const std::vector<Vertex> four_side{2, 3, 4, 5};
  EXPECT_TRUE(is_independent_set(k24, four_side));
  const std::vector<Vertex> pair{0, 2};
  EXPECT_FALSE(is_independent_set(complete_graph(3), std::vector<Vertex>{0, 2}));
  EXPECT_FALSE(is_independent_set(k24, pair));
  EXPECT_TRUE(is_independent_set(cycle_graph(5), VertexMask{0}));
  EXPECT_THROW(is_independent_set(k24, std::vector<Vertex>{6}), ArgumentError);
}

}  // namespace
}  // namespace hamstar
