#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>

#include "hamstar/canon.hpp"
#include "hamstar/enumerate.hpp"
#include "hamstar/errors.hpp"
#include "hamstar/families.hpp"
#include "hamstar/graph6.hpp"
#include "oracles.hpp"

namespace hamstar {
namespace {

// Published counts of graphs up to isomorphism (OEIS A000088, A001349).
constexpr std::uint64_t kAllGraphs[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668};
constexpr std::uint64_t kConnectedGraphs[] = {1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080};

TEST(CanonTest, InvariantUnderRelabelling) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 12;
    const Graph g = oracle::random_graph(rng, n, 0.1 + 0.8 * ((trial * 37) % 100) / 100.0);
    const Graph h = oracle::relabel(g, oracle::random_permutation(rng, n));
    ASSERT_EQ(canonical_graph(g), canonical_graph(h)) << g;
  }
}

TEST(CanonTest, HighlySymmetricGraphs) {
  for (const Graph& g : {empty_graph(12), complete_graph(12), cycle_graph(12),
                         complete_bipartite(5, 6), join(cycle_graph(5), empty_graph(6))}) {
    const CanonicalForm cf = canonical_form(g);
    std::vector<int> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[cf.labelling[i]] = i;
    EXPECT_EQ(oracle::relabel(g, perm), cf.graph());
  }
  const CanonicalForm e = canonical_form(empty_graph(12));
  for (Vertex v = 0; v < 12; ++v) EXPECT_EQ(e.orbit[v], 0);
}

TEST(CanonTest, OrbitsMatchBruteForce) {
  GraphEnumerator all(GraphClass::All);
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : all.graphs(n)) {
      const CanonicalForm cf = canonical_form(g);
      const std::vector<int> expected = oracle::orbits(g);
      for (Vertex v = 0; v < n; ++v) ASSERT_EQ(cf.orbit[v], expected[v]) << g;
      for (const Permutation& p : cf.generators) {
        std::vector<int> perm(p.begin(), p.begin() + n);
        ASSERT_EQ(oracle::relabel(g, perm), g);
      }
    }
  }
}

TEST(CanonTest, ColoursRestrictIsomorphisms) {
  const Graph p3 = path_graph(3);
  const CanonicalForm plain = canonical_form(p3);
  EXPECT_TRUE(plain.same_orbit(0, 2));
  const CanonicalForm coloured = canonical_form(p3, {bit(0)});
  EXPECT_FALSE(coloured.same_orbit(0, 2));
}

TEST(EnumerateTest, CountsMatchPublishedValues) {
  GraphEnumerator all(GraphClass::All);
  GraphEnumerator connected(GraphClass::Connected);
  for (int n = 1; n <= 9; ++n) {
    EXPECT_EQ(all.count(n), kAllGraphs[n]) << "n=" << n;
    EXPECT_EQ(connected.count(n), kConnectedGraphs[n]) << "n=" << n;
  }
}

TEST(EnumerateTest, NoTwoOutputsIsomorphic) {
  GraphEnumerator all(GraphClass::All);
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> canon;
    for (const Graph& g : all.graphs(n)) {
      ASSERT_TRUE(g.well_formed());
      ASSERT_TRUE(canon.insert(to_graph6(canonical_graph(g))).second) << to_graph6(g);
    }
  }
}

TEST(EnumerateTest, CoversEveryLabelledGraph) {
  GraphEnumerator all(GraphClass::All);
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> canon;
    for (const Graph& g : all.graphs(n)) canon.insert(to_graph6(canonical_graph(g)));
    for (const Graph& g : oracle::all_labelled(n)) {
      ASSERT_TRUE(canon.count(to_graph6(canonical_graph(g)))) << g;
    }
  }
}

TEST(EnumerateTest, ConnectedClassIsConnected) {
  GraphEnumerator connected(GraphClass::Connected);
  for (int n = 1; n <= 7; ++n) {
    connected.for_each(n, [](const Graph& g) { ASSERT_TRUE(is_connected(g)); });
  }
}

TEST(EnumerateTest, DeterministicOrder) {
  GraphEnumerator a(GraphClass::Connected);
  GraphEnumerator b(GraphClass::Connected);
  EXPECT_EQ(a.graphs(7), b.graphs(7));
}

TEST(EnumerateTest, OrderLimits) {
  GraphEnumerator e(GraphClass::All);
  EXPECT_THROW(e.unit_count(0), CapacityError);
  EXPECT_THROW(e.unit_count(kEnumerationCap + 1), CapacityError);
}

}  // namespace
}  // namespace hamstar
