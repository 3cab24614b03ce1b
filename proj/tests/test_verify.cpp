#include <gtest/gtest.h>

#include <sstream>

#include "oddbic/error.hpp"
#include "oddbic/verify.hpp"

using namespace oddbic;

TEST(Verify, ConfigValidation) {
  VerifyConfig c;
  c.families = in_scope_families();
  EXPECT_NO_THROW(c.validate());
  c.count = 0;
  EXPECT_THROW(c.validate(), Error);
  c.count = 1;
  c.workers = 0;
  EXPECT_THROW(c.validate(), Error);
  c.workers = 1;
  c.max_n = 6;
  try {
    c.validate();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetTooSmall);
  }
}

TEST(Verify, OddLinkedDivergenceIsCountedNotFailed) {
  VerifyConfig c;
  c.families = {FamilyTag::OddLinked};
  c.count = 10;
  auto s = run_verify(c);
  EXPECT_EQ(s.checked, 10);
  EXPECT_EQ(s.unexpected_mismatches, 0);
  EXPECT_EQ(s.families["OddLinked"].statements["summary:trichotomy"].expected_divergent, 10);
  EXPECT_EQ(s.exit_code(), 0);
}

TEST(Verify, WorkersDoNotChangeOutput) {
  VerifyConfig c;
  c.families = in_scope_families();
  c.count = 15;
  c.seed = 3;
  c.workers = 1;
  auto one = to_json(run_verify(c));
  c.workers = 4;
  EXPECT_EQ(to_json(run_verify(c)), one);
}

TEST(Verify, TalliesAreConsistent) {
  VerifyConfig c;
  c.families = in_scope_families();
  c.count = 20;
  auto s = run_verify(c);
  for (const auto& [name, fam] : s.families) {
    EXPECT_EQ(fam.checked, fam.theorem_matches + fam.mismatches) << name;
    for (const auto& [stmt, t] : fam.statements) EXPECT_EQ(t.checked, t.matches + t.mismatches) << stmt;
  }
}

TEST(Enumerate, FiltersAndCountsParseErrors) {
  std::istringstream c4("Cl\n");
  auto s = run_enumerate(c4, 11, 1);
  EXPECT_EQ(s.checked, 0);
  EXPECT_EQ(s.parsed, 1);
  EXPECT_EQ(s.skipped, 1);

  std::istringstream mixed("Bw\n!!\n" + to_graph6(cycle_graph(5)) + "\n");
  auto m = run_enumerate(mixed, 11, 1);
  EXPECT_EQ(m.parse_errors, 1);
  EXPECT_EQ(m.checked, 2);  // the triangle and C5
  EXPECT_EQ(m.exit_code(), 0);

  std::istringstream empty("");
  EXPECT_EQ(run_enumerate(empty, 11, 1).parsed, 0);
}

TEST(Fraction, Trivial) {
  auto full = bicritical_fraction({4}, 1.0, 10, 0);
  EXPECT_EQ(full.front().fraction(), 1.0);
  auto none = bicritical_fraction({4}, 0.0, 10, 0);
  EXPECT_EQ(none.front().fraction(), 0.0);
  EXPECT_EQ(fraction_csv(full), "n,p,trials,fraction\n4,1,10,1.000000\n");
  EXPECT_THROW(bicritical_fraction({27}, 0.5, 1, 0), Error);
  EXPECT_THROW(bicritical_fraction({4}, 0.5, 0, 0), Error);
}
