#include <gtest/gtest.h>

#include <bit>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "oddbic/error.hpp"
#include "oddbic/generators.hpp"
#include "oddbic/independence.hpp"

using namespace oddbic;

namespace {

Graph three_triangles() {
  return disjoint_union(fixture::two_triangles(), cycle_graph(3));
}

}  // namespace

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha_exact(cycle_graph(5)), 2);
  EXPECT_EQ(alpha_exact(fixture::dumbbell()), 2);
  EXPECT_EQ(alpha_exact(fixture::theta7()), 3);
  EXPECT_EQ(alpha_exact(Graph(0)), 0);
}

TEST(Alpha, AgreesWithSubsetScan) {
  for (int i = 0; i < 300; ++i) {
    Graph g = random_gnp(1 + i % 16, 0.1 + 0.1 * (i % 7), derive_seed(21, static_cast<std::uint64_t>(i)));
    ASSERT_EQ(alpha_exact(g), oracle::alpha(g)) << to_graph6(g);
  }
}

TEST(Alpha, RefusesAboveLimit) {
  try {
    alpha_exact(cycle_graph(41), 40);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OracleLimitExceeded);
  }
}

TEST(Mis, Examples) {
  EXPECT_EQ(enumerate_mis(cycle_graph(4)), (std::vector<VertexSet>{{0, 2}, {1, 3}}));
  EXPECT_EQ(enumerate_mis(fixture::bowtie()), (std::vector<VertexSet>{{0, 3}, {0, 4}, {1, 3}, {1, 4}}));
  EXPECT_EQ(enumerate_mis(complete_graph(3)), (std::vector<VertexSet>{{0}, {1}, {2}}));
}

TEST(Mis, AgreesWithSubsetScan) {
  for (int i = 0; i < 200; ++i) {
    Graph g = random_gnp(1 + i % 14, 0.3, derive_seed(22, static_cast<std::uint64_t>(i)));
    std::vector<VertexSet> expected;
    for (auto s : oracle::all_mis(g)) expected.push_back(VertexSet::from_mask(s));
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(enumerate_mis(g), expected) << to_graph6(g);
  }
}

TEST(CoreCorona, Examples) {
  auto theta = core_corona_oracle(fixture::theta7());
  EXPECT_EQ(theta.alpha, 3);
  EXPECT_EQ(theta.core, (VertexSet{3}));
  EXPECT_EQ(theta.corona, (VertexSet{0, 1, 3, 5, 6}));
  auto dumbbell = core_corona_oracle(fixture::dumbbell());
  EXPECT_TRUE(dumbbell.core.empty());
  EXPECT_EQ(dumbbell.corona, VertexSet::range(6));
  auto bowtie = core_corona_oracle(fixture::bowtie());
  EXPECT_TRUE(bowtie.core.empty());
  EXPECT_EQ(bowtie.corona, (VertexSet{0, 1, 3, 4}));
  EXPECT_EQ(bowtie.mis_count, 4u);
  EXPECT_EQ(bowtie.method, ProfileMethod::Oracle);
}

TEST(PolyOct2, Examples) {
  EXPECT_EQ(alpha_poly_oct2(cycle_graph(5)), 2);
  EXPECT_EQ(alpha_poly_oct2(fixture::theta7()), 3);
  try {
    alpha_poly_oct2(three_triangles());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoSmallTransversal);
  }
  auto theta = core_corona_poly(fixture::theta7());
  EXPECT_EQ(theta.core, (VertexSet{3}));
  EXPECT_EQ(theta.corona, (VertexSet{0, 1, 3, 5, 6}));
  EXPECT_EQ(theta.method, ProfileMethod::PolyOct2);
  EXPECT_FALSE(theta.mis_count);
  auto c5 = core_corona_poly(cycle_graph(5));
  EXPECT_TRUE(c5.core.empty());
  EXPECT_EQ(c5.corona, VertexSet::range(5));
  auto f5 = core_corona_poly(fixture::fused5());
  EXPECT_TRUE(f5.core.empty());
  EXPECT_EQ(f5.corona, VertexSet::range(5));
}

TEST(PolyOct2, TransversalOrder) {
  EXPECT_EQ(find_small_transversal(cycle_graph(4)), VertexSet{});
  EXPECT_EQ(find_small_transversal(cycle_graph(5)), (VertexSet{0}));
  EXPECT_EQ(find_small_transversal(fixture::two_triangles()), (VertexSet{0, 3}));
  EXPECT_FALSE(find_small_transversal(three_triangles()));
}

TEST(PolyOct2, AgreesWithOracleWhereApplicable) {
  int applicable = 0;
  for (int i = 0; i < 400; ++i) {
    Graph g = random_gnp(2 + i % 15, 0.15 + 0.05 * (i % 4), derive_seed(23, static_cast<std::uint64_t>(i)));
    if (!find_small_transversal(g)) continue;
    ++applicable;
    ASSERT_EQ(alpha_poly_oct2(g), alpha_exact(g)) << to_graph6(g);
    auto poly = core_corona_poly(g);
    auto ref = oracle::core_corona(g);
    ASSERT_EQ(poly.core, ref.core) << to_graph6(g);
    ASSERT_EQ(poly.corona, ref.corona) << to_graph6(g);
  }
  EXPECT_GT(applicable, 100);
}

TEST(Berge, CertifiersAgreeWithOracle) {
  for (int i = 0; i < 60; ++i) {
    Graph g = random_gnp(2 + i % 11, 0.3, derive_seed(24, static_cast<std::uint64_t>(i)));
    const auto ref = oracle::core_corona(g);
    for (auto mask : maximal_independent_sets(g, (std::uint64_t{1} << g.n()) - 1)) {
      VertexSet s = VertexSet::from_mask(mask);
      const bool maximum = static_cast<int>(s.size()) == ref.alpha;
      ASSERT_EQ(is_maximum_by_matchability(g, s), maximum) << to_graph6(g) << " " << s.to_string();
      for (Vertex v : s) {
        ASSERT_EQ(in_core_by_matchability(g, s, v), maximum && ref.core.contains(v)) << to_graph6(g);
      }
    }
  }
}
