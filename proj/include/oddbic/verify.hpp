#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "oddbic/closed_form.hpp"
#include "oddbic/family.hpp"
#include "oddbic/generators.hpp"
#include "oddbic/json_io.hpp"

namespace oddbic {

struct VerifyConfig {
  std::vector<FamilyTag> families;
  int count = 1;
  int max_n = 20;
  std::uint64_t seed = 0;
  int workers = 1;
  int oracle_limit = independence_oracle_limit();

  // Throws Error{InvalidArgument} or Error{BudgetTooSmall}.
  void validate() const;
};

struct StatementTally {
  int checked = 0;
  int matches = 0;
  int mismatches = 0;           // unexpected only
  int expected_divergent = 0;   // written statement fails as the theorems force
};

struct FamilyTally {
  int checked = 0;
  int theorem_matches = 0;  // instances with no unexpected mismatch
  int mismatches = 0;       // instances with at least one
  std::map<std::string, StatementTally> statements;
};

struct MismatchRecord {
  FamilyTag family = FamilyTag::OutOfScope;
  std::uint64_t seed = 0;  // random_family(family, max_n, seed) replays it
  std::string graph6;
  Json recipes;
  std::string statement;
  std::string detail;
};

struct VerifySummary {
  std::map<std::string, FamilyTally> families;  // keyed by family name
  std::vector<MismatchRecord> mismatches;
  int checked = 0;
  int unexpected_mismatches = 0;
  int expected_divergences = 0;
  int parsed = 0;        // enumerate: readable lines
  int skipped = 0;       // enumerate: filtered out
  int parse_errors = 0;  // enumerate: unreadable lines
  double elapsed_seconds = 0;

  int exit_code() const { return unexpected_mismatches == 0 ? 0 : 1; }
};

struct InstanceCheck {
  FamilyClassification cls;
  std::optional<AnalysisReport> predicted;
  std::optional<AnalysisReport> oracle;
  std::vector<StatementResult> statements;
};

// Closed form against the oracle plus every named statement, evaluated on
// the oracle report. Exceptions from classification or prediction become
// failed "classify:structure" / "closed_form:predict" statements.
InstanceCheck check_instance(const Graph& g, const FamilyClassification& cls, int oracle_limit);

std::uint64_t instance_seed(std::uint64_t seed, FamilyTag family, int index);

VerifySummary run_verify(const VerifyConfig& config);

// Reads graph6 lines and checks every connected 2-bicritical graph with one
// or two odd cycles. Lines with n > max_n count as parse errors.
VerifySummary run_enumerate(std::istream& in, int max_n, int workers, int oracle_limit = independence_oracle_limit());

struct FractionRow {
  int n = 0;
  double p = 0;
  int trials = 0;
  int bicritical = 0;
  double fraction() const { return trials == 0 ? 0.0 : static_cast<double>(bicritical) / trials; }
};

// Seed of trial `trial` at order `n`: derive_seed(derive_seed(seed, n), trial).
std::uint64_t fraction_sample_seed(std::uint64_t seed, int n, int trial);

// Throws Error{OracleLimitExceeded} / Error{InvalidArgument}.
std::vector<FractionRow> bicritical_fraction(const std::vector<int>& orders, double p, int trials, std::uint64_t seed,
                                             int workers = 1);
std::string fraction_csv(const std::vector<FractionRow>& rows);

Json to_json(const VerifySummary& s);
std::string summary_text(const VerifySummary& s);

// Runs fn(i) for i in [0, count) on `workers` threads.
void parallel_for(int count, int workers, const std::function<void(int)>& fn);

}  // namespace oddbic
