#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddbic/family.hpp"
#include "oddbic/graph.hpp"
#include "oddbic/limits.hpp"
#include "oddbic/matching.hpp"

namespace oddbic {

// |core| + |corona| - 2 alpha.
enum class IdentityClass { TwoAlpha, TwoAlphaPlus1, TwoAlphaPlus2 };
enum class Provenance { ClosedForm, Oracle };

std::string_view identity_name(IdentityClass c);
std::string_view provenance_name(Provenance p);

struct AnalysisReport {
  FamilyClassification family;
  int n = 0;
  int alpha = 0;
  int mu = 0;
  VertexSet core;
  VertexSet corona;
  std::optional<GallaiEdmonds> ge;
  int identity_value = 0;
  std::optional<IdentityClass> identity_class;  // empty when the value is outside {0,1,2}
  bool partition_holds = false;                 // corona and N(core) partition V
  Provenance provenance = Provenance::ClosedForm;
  std::vector<std::string> mismatches;
};

// Fills alpha, mu, core, corona and (where the structure is known) the
// Gallai-Edmonds triple from the family formulas alone. The identity class
// and the partition flag are derived from the predicted sets.
// Throws Error{OutOfScopeClassification}.
AnalysisReport predict(const Graph& g, const FamilyClassification& cls);

// The same report computed by exhaustive MIS enumeration, blossom matching
// and the definitional Gallai-Edmonds decomposition.
AnalysisReport oracle_report(const Graph& g, const FamilyClassification& cls, int limit = independence_oracle_limit());

// Field names on which the two reports disagree ("alpha", "core", ...). The
// Gallai-Edmonds triple is compared only when the prediction carries one.
std::vector<std::string> compare_reports(const AnalysisReport& predicted, const AnalysisReport& oracle);

struct StatementResult {
  std::string name;
  bool holds = false;     // the statement as written, evaluated on the report
  bool expected = true;   // what the family theorems force it to be
  std::string detail;

  bool unexpected() const { return holds != expected; }
  bool expected_divergent() const { return !expected && !holds; }
};

// Evaluates every applicable per-family and summary statement on the
// report. Statements whose written form contradicts the per-family theorem
// values carry expected = false, so they are reported without counting as
// failures.
std::vector<StatementResult> check_summary_identities(const AnalysisReport& report);

}  // namespace oddbic
