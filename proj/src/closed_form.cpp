#include "oddbic/closed_form.hpp"

#include "oddbic/error.hpp"
#include "oddbic/independence.hpp"

namespace oddbic {

std::string_view identity_name(IdentityClass c) {
  switch (c) {
    case IdentityClass::TwoAlpha: return "TwoAlpha";
    case IdentityClass::TwoAlphaPlus1: return "TwoAlphaPlus1";
    case IdentityClass::TwoAlphaPlus2: return "TwoAlphaPlus2";
  }
  return "TwoAlpha";
}

std::string_view provenance_name(Provenance p) { return p == Provenance::ClosedForm ? "ClosedForm" : "Oracle"; }

namespace {

void finish(const Graph& g, AnalysisReport& r) {
  r.identity_value = static_cast<int>(r.core.size() + r.corona.size()) - 2 * r.alpha;
  switch (r.identity_value) {
    case 0: r.identity_class = IdentityClass::TwoAlpha; break;
    case 1: r.identity_class = IdentityClass::TwoAlphaPlus1; break;
    case 2: r.identity_class = IdentityClass::TwoAlphaPlus2; break;
    default: r.identity_class.reset();
  }
  VertexSet ncore = neighborhood(g, r.core);
  r.partition_holds = r.corona.disjoint_from(ncore) && r.corona.unite(ncore) == VertexSet::range(g.n());
}

std::string sets_detail(const VertexSet& a, const VertexSet& b) { return a.to_string() + " vs " + b.to_string(); }

bool two_odd_cycles(FamilyTag tag) {
  return tag == FamilyTag::FusedOdd || tag == FamilyTag::EvenLinked || tag == FamilyTag::OddLinked ||
         tag == FamilyTag::DisconnectedPair;
}

}  // namespace

AnalysisReport predict(const Graph& g, const FamilyClassification& cls) {
  AnalysisReport r;
  r.family = cls;
  r.n = g.n();
  r.provenance = Provenance::ClosedForm;
  const VertexSet all = VertexSet::range(g.n());
  const int n = g.n();

  switch (cls.tag) {
    case FamilyTag::OneOddCycle:
    case FamilyTag::FusedOdd:
      // Factor-critical: D = V.
      r.alpha = r.mu = (n - 1) / 2;
      r.corona = (cls.tag == FamilyTag::FusedOdd && cls.shared.size() == 1) ? all.minus(cls.shared) : all;
      r.ge = GallaiEdmonds{all, {}, {}};
      break;
    case FamilyTag::EvenLinked:
      r.alpha = r.mu = (n - 1) / 2;
      r.core = cls.B;
      r.corona = all.minus(cls.A);
      r.ge = GallaiEdmonds{all.minus(cls.B), cls.B, {}};
      break;
    case FamilyTag::OddLinked:
      r.alpha = (n - 2) / 2;
      r.mu = n / 2;
      r.corona = all;
      break;
    case FamilyTag::DisconnectedPair:
      r.alpha = r.mu = (n - 2) / 2;
      r.corona = all;
      break;
    case FamilyTag::OutOfScope:
      throw Error(ErrorCode::OutOfScopeClassification, cls.reason.value_or("graph is outside the four families"));
  }
  finish(g, r);
  return r;
}

AnalysisReport oracle_report(const Graph& g, const FamilyClassification& cls, int limit) {
  AnalysisReport r;
  r.family = cls;
  r.n = g.n();
  r.provenance = Provenance::Oracle;
  auto profile = core_corona_oracle(g, limit);
  r.alpha = profile.alpha;
  r.core = profile.core;
  r.corona = profile.corona;
  r.mu = matching_number(g);
  r.ge = gallai_edmonds(g);
  finish(g, r);
  return r;
}

std::vector<std::string> compare_reports(const AnalysisReport& predicted, const AnalysisReport& oracle) {
  std::vector<std::string> out;
  if (predicted.alpha != oracle.alpha) out.emplace_back("alpha");
  if (predicted.mu != oracle.mu) out.emplace_back("mu");
  if (predicted.core != oracle.core) out.emplace_back("core");
  if (predicted.corona != oracle.corona) out.emplace_back("corona");
  if (predicted.ge && (!oracle.ge || *predicted.ge != *oracle.ge)) out.emplace_back("gallai_edmonds");
  return out;
}

std::vector<StatementResult> check_summary_identities(const AnalysisReport& r) {
  std::vector<StatementResult> out;
  auto add = [&](std::string name, bool holds, bool expected, std::string detail) {
    out.push_back({std::move(name), holds, expected, std::move(detail)});
  };
  const FamilyTag tag = r.family.tag;
  if (tag == FamilyTag::OutOfScope) return out;

  const int n = r.n;
  const int value = r.identity_value;
  const bool connected = tag != FamilyTag::DisconnectedPair;
  const std::size_t shared = r.family.shared.size();
  const bool share_two = tag == FamilyTag::FusedOdd && shared >= 2;
  const std::string identity = "|core|+|corona|-2alpha=" + std::to_string(value);
  const std::string alpha_mu = "alpha+mu=" + std::to_string(r.alpha + r.mu) + ", n=" + std::to_string(n);

  add("identity:range", value >= 0 && value <= 2, true, identity);

  if (two_odd_cycles(tag)) {
    int claimed = !connected ? 2 : (share_two ? 1 : 0);
    // The odd-linked sets (core empty, corona = V, alpha = (n-2)/2) force 2.
    add("summary:trichotomy", value == claimed, tag != FamilyTag::OddLinked,
        identity + ", summary claims " + std::to_string(claimed));
  }

  // The summary partition statement claims: partition <=> no two odd cycles
  // share two vertices. Fused-odd sets contradict it in both directions.
  add("summary:partition", r.partition_holds == !share_two, tag != FamilyTag::FusedOdd,
      std::string("partition ") + (r.partition_holds ? "holds" : "fails") + ", odd cycles share " +
          std::to_string(shared) + " vertices");

  add("summary:alpha_plus_mu", r.alpha + r.mu == (connected ? n - 1 : n - 2), true, alpha_mu);

  switch (tag) {
    case FamilyTag::OneOddCycle:
    case FamilyTag::FusedOdd: {
      add("factor_critical:not_koenig_egervary", r.alpha + r.mu <= n - 1, true, alpha_mu);
      bool halves = r.alpha == (n - 1) / 2 && r.mu == (n - 1) / 2 && n % 2 == 1;
      add("fused_odd:alpha_mu", halves, true, "alpha=" + std::to_string(r.alpha) + ", mu=" + std::to_string(r.mu));
      add("fused_odd:core_empty", r.core.empty(), true, "core=" + r.core.to_string());
      bool corona_all = r.corona.size() == static_cast<std::size_t>(n);
      if (tag == FamilyTag::OneOddCycle) {
        add("one_odd_cycle:identity", value == 1, true, identity);
        add("one_odd_cycle:corona", corona_all, true, "corona=" + r.corona.to_string());
      } else {
        add("fused_odd:corona", corona_all == share_two, true,
            "corona=" + r.corona.to_string() + ", shared=" + r.family.shared.to_string());
        // The fused-odd corollary claims 2alpha+1 for every member; a single
        // shared vertex gives corona = V - {x} and hence 2alpha.
        add("fused_odd:corollary_identity", value == 1, share_two, identity);
        add("fused_odd:theorem_partition", r.partition_holds == share_two, true,
            std::string("partition ") + (r.partition_holds ? "holds" : "fails"));
      }
      break;
    }
    case FamilyTag::EvenLinked: {
      const auto cyc = static_cast<int>(r.family.cycle_vertices().size());
      add("even_linked:alpha", 2 * r.alpha == n - 1, true, "alpha=" + std::to_string(r.alpha));
      add("even_linked:core", r.core == r.family.B, true, sets_detail(r.core, r.family.B));
      add("even_linked:core_size", 2 * static_cast<int>(r.core.size()) == n - cyc + 1, true,
          "|core|=" + std::to_string(r.core.size()));
      VertexSet expected_corona = VertexSet::range(n).minus(r.family.A);
      add("even_linked:corona", r.corona == expected_corona, true, sets_detail(r.corona, expected_corona));
      add("even_linked:corona_size", 2 * static_cast<int>(r.corona.size()) == n + cyc - 3, true,
          "|corona|=" + std::to_string(r.corona.size()));
      add("even_linked:identity", value == 0, true, identity);
      add("even_linked:partition", r.partition_holds, true, "");
      if (r.ge) {
        bool ge_ok = r.ge->A == r.core && r.ge->D == VertexSet::range(n).minus(r.core) && r.ge->C.empty();
        add("even_linked:gallai_edmonds", ge_ok, true,
            "D=" + r.ge->D.to_string() + " A=" + r.ge->A.to_string() + " C=" + r.ge->C.to_string());
        add("even_linked:matching_number", 2 * r.mu == n - 1, true, "mu=" + std::to_string(r.mu));
      }
      break;
    }
    case FamilyTag::OddLinked:
      add("odd_linked:perfect_matching", 2 * r.mu == n, true, "mu=" + std::to_string(r.mu));
      add("odd_linked:alpha", 2 * r.alpha == n - 2, true, "alpha=" + std::to_string(r.alpha));
      add("odd_linked:core_empty", r.core.empty(), true, "core=" + r.core.to_string());
      add("odd_linked:corona", r.corona.size() == static_cast<std::size_t>(n), true, "corona=" + r.corona.to_string());
      add("odd_linked:theorem_identity", value == 2, true, identity);
      // The odd-linked corollary claims 2alpha, which the theorem sets above
      // rule out (value n - 2alpha = 2).
      add("odd_linked:corollary_identity", value == 0, false, identity);
      add("odd_linked:corollary_partition", r.partition_holds, true, "");
      break;
    case FamilyTag::DisconnectedPair:
      add("disconnected:identity", value == 2, true, identity);
      break;
    case FamilyTag::OutOfScope:
      break;
  }
  return out;
}

}  // namespace oddbic
