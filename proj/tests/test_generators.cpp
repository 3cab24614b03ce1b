#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oddbic/bicritical.hpp"
#include "oddbic/error.hpp"
#include "oddbic/family.hpp"
#include "oddbic/generators.hpp"
#include "oddbic/matching.hpp"

using namespace oddbic;

TEST(Seeds, SplitMixReferenceValues) {
  // First outputs of SplitMix64 seeded with 0 and 1234567.
  EXPECT_EQ(mix64(0), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(mix64(1234567), 0x599ED017FB08FC85ULL);
  EXPECT_NE(derive_seed(7, 0), derive_seed(7, 1));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Rng, ReductionsStayInRange) {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    int v = rng.uniform_int(-3, 4);
    ASSERT_GE(v, -3);
    ASSERT_LE(v, 4);
    double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Build, Examples) {
  EXPECT_EQ(build({OddCycleBase{5}, {}}), cycle_graph(5));
  EXPECT_EQ(build({OddCycleBase{3}, {PendantStep{3, 1, 2}}}), fixture::dumbbell());
  Graph f = build({OddCycleBase{3}, {EarStep{0, 1, 2}}});
  EXPECT_EQ(f.n(), 5);
  EXPECT_EQ(f.m(), 6);
  EXPECT_EQ(f, fixture::fused5());
  EXPECT_EQ(build({OddK4Base{}, {}}), complete_graph(4));
}

TEST(Build, RejectsInvalidSteps) {
  auto code = [](const EarPendantRecipe& r) {
    try {
      build(r);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code({OddCycleBase{4}, {}}), ErrorCode::InvalidRecipeStep);
  EXPECT_EQ(code({OddCycleBase{3}, {EarStep{0, 1, 1}}}), ErrorCode::InvalidRecipeStep);
  EXPECT_EQ(code({OddCycleBase{3}, {EarStep{0, 1, 0}}}), ErrorCode::InvalidRecipeStep);
  EXPECT_EQ(code({OddCycleBase{3}, {EarStep{0, 0, 0}}}), ErrorCode::InvalidRecipeStep);
  EXPECT_EQ(code({OddCycleBase{3}, {EarStep{0, 9, 2}}}), ErrorCode::InvalidRecipeStep);
  EXPECT_EQ(code({OddCycleBase{3}, {PendantStep{4, 1, 0}}}), ErrorCode::InvalidRecipeStep);
  EXPECT_EQ(code({OddCycleBase{3}, {PendantStep{3, 0, 0}}}), ErrorCode::InvalidRecipeStep);
}

TEST(RandomFamily, Examples) {
  auto even = random_family(FamilyTag::EvenLinked, 7, 42);
  EXPECT_EQ(even.graph.n(), 7);
  EXPECT_EQ(classify(even.graph, false).tag, FamilyTag::EvenLinked);
  EXPECT_EQ(random_family(FamilyTag::OneOddCycle, 3, 99).graph, cycle_graph(3));
  try {
    random_family(FamilyTag::FusedOdd, 4, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetTooSmall);
  }
}

TEST(RandomFamily, DeterministicAndWithinBudget) {
  for (FamilyTag f : in_scope_families()) {
    for (int i = 0; i < 30; ++i) {
      auto a = random_family(f, 20, static_cast<std::uint64_t>(i));
      auto b = random_family(f, 20, static_cast<std::uint64_t>(i));
      ASSERT_EQ(a.graph, b.graph);
      ASSERT_EQ(a.recipes, b.recipes);
      ASSERT_LE(a.graph.n(), 20);
      ASSERT_GE(a.graph.n(), minimum_order(f));
    }
  }
}

TEST(RandomFamily, MembersAreBicritical) {
  for (FamilyTag f : in_scope_families()) {
    for (int i = 0; i < 30; ++i) {
      auto inst = random_family(f, 16, derive_seed(51, static_cast<std::uint64_t>(i)));
      ASSERT_TRUE(is_2bicritical(inst.graph).is_bicritical) << to_graph6(inst.graph);
    }
  }
}

TEST(Companion, Examples) {
  auto theta = fixture::theta7();
  auto h = companion_H(theta, classify(theta, false));
  EXPECT_EQ(h.H.n(), 8);
  EXPECT_EQ(h.added, (VertexSet{7}));
  EXPECT_EQ(neighborhood(h.H, {7}), (VertexSet{2, 4}));
  EXPECT_TRUE(is_matching_covered(h.without_X.graph));
  EXPECT_EQ(h.without_X.graph.n(), 4);

  auto dumbbell = fixture::dumbbell();
  auto hd = companion_H(dumbbell, classify(dumbbell, false));
  EXPECT_TRUE(is_matching_covered(hd.without_X.graph));

  auto bowtie = fixture::bowtie();
  try {
    companion_H(bowtie, classify(bowtie, false));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongFamily);
  }
}

TEST(FactorCritical, Budget) {
  EXPECT_EQ(random_factor_critical(3, 8), cycle_graph(3));
  EXPECT_THROW(random_factor_critical(2, 8), Error);
}

TEST(Gnp, Examples) {
  EXPECT_EQ(random_gnp(4, 0.0, 3).m(), 0);
  EXPECT_EQ(random_gnp(4, 1.0, 3), complete_graph(4));
  EXPECT_EQ(random_gnp(8, 0.5, 1), random_gnp(8, 0.5, 1));
  EXPECT_NE(random_gnp(12, 0.5, 1), random_gnp(12, 0.5, 2));
}
