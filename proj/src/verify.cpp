#include "oddbic/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "oddbic/bicritical.hpp"
#include "oddbic/error.hpp"

namespace oddbic {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  FamilyTag family = FamilyTag::OutOfScope;
  std::uint64_t seed = 0;
  std::string graph6;
  Json recipes = Json::array();
  std::vector<StatementResult> statements;
  bool skipped = false;
  bool parse_error = false;
};

void tally(VerifySummary& summary, const Outcome& o) {
  auto& fam = summary.families[std::string(family_name(o.family))];
  ++fam.checked;
  ++summary.checked;
  bool clean = true;
  for (const auto& s : o.statements) {
    auto& st = fam.statements[s.name];
    ++st.checked;
    if (s.unexpected()) {
      ++st.mismatches;
      ++summary.unexpected_mismatches;
      clean = false;
      summary.mismatches.push_back({o.family, o.seed, o.graph6, o.recipes, s.name, s.detail});
    } else {
      ++st.matches;
      if (s.expected_divergent()) {
        ++st.expected_divergent;
        ++summary.expected_divergences;
      }
    }
  }
  ++(clean ? fam.theorem_matches : fam.mismatches);
}

StatementResult failure(std::string name, std::string detail) { return {std::move(name), false, true, std::move(detail)}; }

}  // namespace

void VerifyConfig::validate() const {
  if (families.empty()) throw Error(ErrorCode::InvalidArgument, "no families selected");
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be >= 1");
  if (workers < 1) throw Error(ErrorCode::InvalidArgument, "workers must be >= 1");
  for (FamilyTag f : families) {
    if (f == FamilyTag::OutOfScope) throw Error(ErrorCode::InvalidArgument, "OutOfScope is not a family");
    if (max_n < minimum_order(f)) {
      throw Error(ErrorCode::BudgetTooSmall,
                  std::string(family_name(f)) + " needs max-n >= " + std::to_string(minimum_order(f)));
    }
  }
}

void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  for (int w = 0; w < std::min(workers, count); ++w) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

InstanceCheck check_instance(const Graph& g, const FamilyClassification& cls, int oracle_limit) {
  InstanceCheck out;
  out.cls = cls;
  try {
    out.predicted = predict(g, cls);
  } catch (const Error& e) {
    out.statements.push_back(failure("closed_form:predict", e.what()));
  }
  out.oracle = oracle_report(g, cls, oracle_limit);
  if (out.predicted) {
    const auto& p = *out.predicted;
    const auto& o = *out.oracle;
    auto compare = [&](const char* name, bool same, std::string detail) {
      out.statements.push_back({std::string("closed_form:") + name, same, true, std::move(detail)});
    };
    compare("alpha", p.alpha == o.alpha, std::to_string(p.alpha) + " vs " + std::to_string(o.alpha));
    compare("mu", p.mu == o.mu, std::to_string(p.mu) + " vs " + std::to_string(o.mu));
    compare("core", p.core == o.core, p.core.to_string() + " vs " + o.core.to_string());
    compare("corona", p.corona == o.corona, p.corona.to_string() + " vs " + o.corona.to_string());
    if (p.ge) {
      compare("gallai_edmonds", o.ge && *p.ge == *o.ge,
              "A " + p.ge->A.to_string() + " vs " + (o.ge ? o.ge->A.to_string() : std::string("-")));
    }
    out.predicted->mismatches = compare_reports(p, o);
  }
  auto named = check_summary_identities(*out.oracle);
  out.statements.insert(out.statements.end(), named.begin(), named.end());
  return out;
}

std::uint64_t instance_seed(std::uint64_t seed, FamilyTag family, int index) {
  return derive_seed(derive_seed(seed, static_cast<std::uint64_t>(family)), static_cast<std::uint64_t>(index));
}

VerifySummary run_verify(const VerifyConfig& config) {
  config.validate();
  const auto start = Clock::now();
  const int per_family = config.count;
  const int total = per_family * static_cast<int>(config.families.size());
  std::vector<Outcome> outcomes(static_cast<std::size_t>(total));

  parallel_for(total, config.workers, [&](int item) {
    Outcome& o = outcomes[static_cast<std::size_t>(item)];
    o.family = config.families[static_cast<std::size_t>(item / per_family)];
    o.seed = instance_seed(config.seed, o.family, item % per_family);
    FamilyInstance inst = random_family(o.family, config.max_n, o.seed);
    o.graph6 = to_graph6(inst.graph);
    for (const auto& r : inst.recipes) o.recipes.push_back(to_json(r));
    try {
      auto cls = classify(inst.graph, /*assume_bicritical=*/true);
      o.statements.push_back({"classify:roundtrip", cls.tag == o.family, true,
                              "classified as " + std::string(family_name(cls.tag))});
      if (cls.tag != FamilyTag::OutOfScope) {
        auto check = check_instance(inst.graph, cls, config.oracle_limit);
        o.statements.insert(o.statements.end(), check.statements.begin(), check.statements.end());
      }
    } catch (const Error& e) {
      o.statements.push_back(failure("classify:structure", e.what()));
    }
  });

  VerifySummary summary;
  for (const auto& o : outcomes) tally(summary, o);
  summary.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return summary;
}

VerifySummary run_enumerate(std::istream& in, int max_n, int workers, int oracle_limit) {
  const auto start = Clock::now();
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  std::vector<Outcome> outcomes(lines.size());

  parallel_for(static_cast<int>(lines.size()), workers, [&](int item) {
    Outcome& o = outcomes[static_cast<std::size_t>(item)];
    const std::string& line = lines[static_cast<std::size_t>(item)];
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const Error&) {
      o.parse_error = true;
      return;
    }
    if (g.n() > max_n) {
      o.parse_error = true;
      return;
    }
    o.graph6 = line;
    if (!is_connected(g)) {
      o.skipped = true;
      return;
    }
    try {
      auto cls = classify(g, /*assume_bicritical=*/false);
      if (cls.tag == FamilyTag::OutOfScope) {
        o.skipped = true;
        return;
      }
      o.family = cls.tag;
      auto check = check_instance(g, cls, oracle_limit);
      o.statements = std::move(check.statements);
    } catch (const Error& e) {
      o.statements.push_back(failure("classify:structure", e.what()));
    }
  });

  VerifySummary summary;
  for (const auto& o : outcomes) {
    if (o.parse_error) {
      ++summary.parse_errors;
      continue;
    }
    ++summary.parsed;
    if (o.skipped) {
      ++summary.skipped;
      continue;
    }
    tally(summary, o);
  }
  summary.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return summary;
}

std::uint64_t fraction_sample_seed(std::uint64_t seed, int n, int trial) {
  return derive_seed(derive_seed(seed, static_cast<std::uint64_t>(n)), static_cast<std::uint64_t>(trial));
}

std::vector<FractionRow> bicritical_fraction(const std::vector<int>& orders, double p, int trials, std::uint64_t seed,
                                             int workers) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "p must lie in [0, 1]");
  const int limit = bicritical_oracle_limit();
  for (int n : orders) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "orders must be positive");
    require_within_limit(n, limit, "bicritical-fraction");
  }
  std::vector<FractionRow> rows;
  for (int n : orders) {
    std::vector<char> verdicts(static_cast<std::size_t>(trials), 0);
    parallel_for(trials, workers, [&](int t) {
      Graph g = random_gnp(n, p, fraction_sample_seed(seed, n, t));
      verdicts[static_cast<std::size_t>(t)] = is_2bicritical(g, limit).is_bicritical ? 1 : 0;
    });
    FractionRow row{n, p, trials, 0};
    for (char v : verdicts) row.bicritical += v;
    rows.push_back(row);
  }
  return rows;
}

std::string fraction_csv(const std::vector<FractionRow>& rows) {
  std::string out = "n,p,trials,fraction\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%g,%d,%.6f\n", r.n, r.p, r.trials, r.fraction());
    out += buf;
  }
  return out;
}

Json to_json(const VerifySummary& s) {
  Json families = Json::object();
  for (const auto& [name, fam] : s.families) {
    Json statements = Json::object();
    for (const auto& [stmt, t] : fam.statements) {
      statements[stmt] = {{"checked", t.checked},
                          {"matches", t.matches},
                          {"mismatches", t.mismatches},
                          {"expected_divergent", t.expected_divergent}};
    }
    families[name] = {{"checked", fam.checked},
                      {"theorem_matches", fam.theorem_matches},
                      {"mismatches", fam.mismatches},
                      {"statements", statements}};
  }
  Json records = Json::array();
  for (const auto& m : s.mismatches) {
    records.push_back({{"family", family_name(m.family)},
                       {"seed", m.seed},
                       {"graph6", m.graph6},
                       {"recipes", m.recipes},
                       {"statement", m.statement},
                       {"detail", m.detail}});
  }
  return {{"checked", s.checked},
          {"unexpected_mismatches", s.unexpected_mismatches},
          {"expected_divergences", s.expected_divergences},
          {"parsed", s.parsed},
          {"skipped", s.skipped},
          {"parse_errors", s.parse_errors},
          {"families", families},
          {"mismatch_records", records}};
}

std::string summary_text(const VerifySummary& s) {
  std::ostringstream out;
  out << "checked " << s.checked << " instances, " << s.unexpected_mismatches << " unexpected mismatches, "
      << s.expected_divergences << " expected divergences\n";
  if (s.parsed > 0 || s.parse_errors > 0) {
    out << "parsed " << s.parsed << " lines, skipped " << s.skipped << ", parse errors " << s.parse_errors << "\n";
  }
  for (const auto& [name, fam] : s.families) {
    out << "  " << name << ": checked " << fam.checked << ", theorem matches " << fam.theorem_matches
        << ", mismatches " << fam.mismatches << "\n";
    for (const auto& [stmt, t] : fam.statements) {
      if (t.mismatches == 0 && t.expected_divergent == 0) continue;
      out << "    " << stmt << ": " << t.mismatches << " unexpected, " << t.expected_divergent
          << " expected-divergent of " << t.checked << "\n";
    }
  }
  for (const auto& m : s.mismatches) {
    out << "  MISMATCH " << family_name(m.family) << " seed=" << m.seed << " g6=" << m.graph6 << " " << m.statement
        << ": " << m.detail << "\n";
  }
  return out.str();
}

}  // namespace oddbic
