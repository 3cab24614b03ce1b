#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oddbic/error.hpp"
#include "oddbic/family.hpp"
#include "oddbic/generators.hpp"

using namespace oddbic;

TEST(Cycles, Examples) {
  auto c5 = enumerate_cycles(cycle_graph(5));
  EXPECT_EQ(c5.cycles.size(), 1u);
  EXPECT_EQ(c5.odd_count, 1);
  EXPECT_EQ(c5.cycles.front(), (Cycle{0, 1, 2, 3, 4}));
  auto k4 = enumerate_cycles(complete_graph(4));
  EXPECT_EQ(k4.cycles.size(), 7u);
  EXPECT_EQ(k4.odd_count, 4);
  auto d = enumerate_cycles(fixture::dumbbell());
  EXPECT_EQ(d.cycles.size(), 2u);
  EXPECT_EQ(d.odd_count, 2);
}

TEST(Cycles, CapAndOddStop) {
  auto capped = enumerate_cycles(complete_graph(6), 10);
  EXPECT_TRUE(capped.truncated);
  EXPECT_EQ(capped.cycles.size(), 10u);
  auto stopped = enumerate_cycles(complete_graph(5), kDefaultCycleCap, 2);
  EXPECT_TRUE(stopped.truncated);
  EXPECT_EQ(stopped.odd_count, 3);
}

TEST(Cycles, CountsOnCompleteGraphs) {
  // K_n has sum_{k>=3} C(n,k) (k-1)!/2 cycles.
  EXPECT_EQ(enumerate_cycles(complete_graph(5)).cycles.size(), 37u);
  EXPECT_EQ(enumerate_cycles(complete_graph(6)).cycles.size(), 197u);
}

TEST(Classify, Examples) {
  auto theta = classify(fixture::theta7(), false);
  EXPECT_EQ(theta.tag, FamilyTag::EvenLinked);
  EXPECT_EQ(theta.X, (VertexSet{0, 1, 5, 6}));
  EXPECT_EQ(theta.x, 2);
  EXPECT_EQ(theta.y, 4);
  EXPECT_EQ(theta.A, (VertexSet{2, 4}));
  EXPECT_EQ(theta.B, (VertexSet{3}));

  auto dumbbell = classify(fixture::dumbbell(), false);
  EXPECT_EQ(dumbbell.tag, FamilyTag::OddLinked);
  EXPECT_EQ(dumbbell.x, 2);
  EXPECT_EQ(dumbbell.y, 3);
  EXPECT_EQ(dumbbell.X, (VertexSet{0, 1, 4, 5}));

  auto bowtie = classify(fixture::bowtie(), false);
  EXPECT_EQ(bowtie.tag, FamilyTag::FusedOdd);
  EXPECT_EQ(bowtie.shared, (VertexSet{2}));
  EXPECT_EQ(bowtie.x, 2);

  auto fused = classify(fixture::fused5(), false);
  EXPECT_EQ(fused.tag, FamilyTag::FusedOdd);
  EXPECT_EQ(fused.shared, (VertexSet{0, 1, 2}));

  EXPECT_EQ(classify(fixture::two_triangles(), false).tag, FamilyTag::DisconnectedPair);
  EXPECT_EQ(classify(cycle_graph(7), false).tag, FamilyTag::OneOddCycle);
}

TEST(Classify, OutOfScopeReasons) {
  auto c4 = classify(cycle_graph(4), false);
  EXPECT_EQ(c4.tag, FamilyTag::OutOfScope);
  EXPECT_EQ(c4.reason, "not 2-bicritical");
  EXPECT_EQ(classify(complete_graph(4), false).tag, FamilyTag::OutOfScope);
  EXPECT_EQ(classify(cycle_graph(4), true).tag, FamilyTag::OutOfScope);
}

TEST(Classify, RoundTripsGeneratedInstances) {
  for (FamilyTag f : in_scope_families()) {
    for (int i = 0; i < 40; ++i) {
      auto inst = random_family(f, 18, derive_seed(41, static_cast<std::uint64_t>(i)));
      auto cls = classify(inst.graph, false);
      ASSERT_EQ(cls.tag, f) << to_graph6(inst.graph);
      if (f == FamilyTag::EvenLinked) {
        EXPECT_EQ(cls.A.size(), cls.B.size() + 1);
        EXPECT_TRUE(cls.A.contains(*cls.x) && cls.A.contains(*cls.y));
      }
      if (f == FamilyTag::OddLinked) {
        EXPECT_EQ(cls.A.size(), cls.B.size());
        EXPECT_TRUE(cls.A.contains(*cls.x) && cls.B.contains(*cls.y));
      }
    }
  }
}

TEST(Classify, FamilyNames) {
  for (FamilyTag f : in_scope_families()) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_FALSE(parse_family("Nope"));
}
