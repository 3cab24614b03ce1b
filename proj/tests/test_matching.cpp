#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "oddbic/error.hpp"
#include "oddbic/generators.hpp"
#include "oddbic/matching.hpp"

using namespace oddbic;

TEST(Matching, Examples) {
  EXPECT_EQ(maximum_matching(cycle_graph(5)).size(), 2);
  Matching d = maximum_matching(fixture::dumbbell());
  EXPECT_EQ(d.size(), 3);
  EXPECT_TRUE(is_matching_of(fixture::dumbbell(), d));
  EXPECT_EQ(maximum_matching(Graph(4)).size(), 0);
}

TEST(Matching, AgreesWithBruteForce) {
  for (int i = 0; i < 300; ++i) {
    int n = 1 + i % 14;
    double p = 0.1 + 0.1 * (i % 8);
    Graph g = random_gnp(n, p, derive_seed(11, static_cast<std::uint64_t>(i)));
    Matching m = maximum_matching(g);
    ASSERT_TRUE(is_matching_of(g, m));
    ASSERT_EQ(m.size(), oracle::mu(g)) << to_graph6(g);
  }
}

TEST(Matching, BipartiteAgreesWithGeneral) {
  for (int i = 0; i < 100; ++i) {
    Graph g = random_gnp(2 + i % 12, 0.35, derive_seed(12, static_cast<std::uint64_t>(i)));
    auto parts = bipartition(g);
    if (!parts) continue;
    EXPECT_EQ(bipartite_maximum_matching(g, parts->first).size(), matching_number(g));
  }
}

TEST(GallaiEdmonds, Examples) {
  auto c5 = gallai_edmonds(cycle_graph(5));
  EXPECT_EQ(c5.D, VertexSet::range(5));
  EXPECT_TRUE(c5.A.empty() && c5.C.empty());
  auto theta = gallai_edmonds(fixture::theta7());
  EXPECT_EQ(theta.D, (VertexSet{0, 1, 2, 4, 5, 6}));
  EXPECT_EQ(theta.A, (VertexSet{3}));
  EXPECT_TRUE(theta.C.empty());
  auto c4 = gallai_edmonds(cycle_graph(4));
  EXPECT_TRUE(c4.D.empty() && c4.A.empty());
  EXPECT_EQ(c4.C, VertexSet::range(4));
}

TEST(GallaiEdmonds, AgreesWithDefinition) {
  for (int i = 0; i < 200; ++i) {
    Graph g = random_gnp(1 + i % 12, 0.3, derive_seed(13, static_cast<std::uint64_t>(i)));
    auto ge = gallai_edmonds(g);
    auto ref = oracle::gallai_edmonds(g);
    ASSERT_EQ(ge.D, ref.D) << to_graph6(g);
    ASSERT_EQ(ge.A, ref.A);
    ASSERT_EQ(ge.C, ref.C);
  }
}

TEST(FactorCritical, Examples) {
  EXPECT_TRUE(is_factor_critical(cycle_graph(5)));
  EXPECT_FALSE(is_factor_critical(cycle_graph(4)));
  EXPECT_TRUE(is_factor_critical(fixture::fused5()));
  EXPECT_FALSE(is_factor_critical(fixture::theta7()));
}

TEST(FactorCritical, RandomEarBuildsAreFactorCritical) {
  for (int i = 0; i < 50; ++i) {
    EXPECT_TRUE(is_factor_critical(random_factor_critical(5 + i % 10, static_cast<std::uint64_t>(i))));
  }
}

TEST(MatchingCovered, Examples) {
  EXPECT_TRUE(is_matching_covered(cycle_graph(6)));
  EXPECT_FALSE(is_matching_covered(path_graph(4)));
  EXPECT_TRUE(is_matching_covered(path_graph(2)));
}

TEST(CanMatchInto, Examples) {
  Graph c5 = cycle_graph(5);
  auto one = can_match_into(c5, {1}, {0, 2});
  ASSERT_TRUE(one);
  EXPECT_EQ(one->pairs(), (std::vector<Edge>{{0, 1}}));
  auto two = can_match_into(c5, {1, 4}, {0, 2});
  ASSERT_TRUE(two);
  EXPECT_EQ(two->pairs(), (std::vector<Edge>{{0, 4}, {1, 2}}));
  EXPECT_FALSE(can_match_into(c5, {1, 3}, {2}));
  EXPECT_THROW(can_match_into(c5, {1}, {1, 2}), Error);
}
