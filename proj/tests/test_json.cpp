#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oddbic/error.hpp"
#include "oddbic/json_io.hpp"

using namespace oddbic;

TEST(Json, ProfileShape) {
  auto j = to_json(core_corona_oracle(fixture::theta7()));
  EXPECT_EQ(j.dump(), R"({"alpha":3,"core":[3],"corona":[0,1,3,5,6],"mis_count":4,"method":"Oracle"})");
  auto poly = to_json(core_corona_poly(fixture::theta7()));
  EXPECT_TRUE(poly["mis_count"].is_null());
  EXPECT_EQ(poly["method"], "PolyOct2");
}

TEST(Json, GraphRoundTrip) {
  Graph g = fixture::theta7();
  EXPECT_EQ(graph_from_json(to_json(g)), g);
}

TEST(Json, RecipeRoundTrip) {
  EarPendantRecipe r{OddCycleBase{5}, {EarStep{0, 2, 2}, PendantStep{3, 2, 1}}};
  Json j = to_json(r);
  EXPECT_EQ(j["base"]["kind"], "OddCycle");
  EXPECT_EQ(j["steps"][0]["kind"], "Ear");
  EXPECT_EQ(j["steps"][1]["kind"], "Pendant");
  EXPECT_EQ(recipe_from_json(j), r);
  EarPendantRecipe k4{OddK4Base{{1, 3, 1, 1, 1, 1}}, {}};
  EXPECT_EQ(recipe_from_json(to_json(k4)), k4);
  EXPECT_THROW(recipe_from_json(Json::parse(R"({"base":{"kind":"Square"},"steps":[]})")), Error);
}

TEST(Json, ClassificationKeys) {
  auto j = to_json(classify(fixture::theta7(), false));
  for (const char* key : {"tag", "C", "C_prime", "shared", "x", "y", "X", "A", "B", "reason"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["tag"], "EvenLinked");
  EXPECT_EQ(j["B"], Json::array({3}));
}
