// oddbic: analyze 2-bicritical graphs with at most two odd cycles, generate
// family members, and run closed-form vs oracle sweeps.
//
// Exit codes: 0 success, 1 unexpected mismatch, 2 usage / parse / config.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "oddbic/bicritical.hpp"
#include "oddbic/closed_form.hpp"
#include "oddbic/error.hpp"
#include "oddbic/family.hpp"
#include "oddbic/generators.hpp"
#include "oddbic/graph_enumeration.hpp"
#include "oddbic/json_io.hpp"
#include "oddbic/verify.hpp"

namespace fs = std::filesystem;
using namespace oddbic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxEnumerateOrder = 11;

int default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return read_all(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  return read_all(in);
}

std::vector<FamilyTag> parse_families(const std::string& csv) {
  if (csv == "all") return in_scope_families();
  std::vector<FamilyTag> out;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) {
    auto tag = parse_family(item);
    if (!tag || *tag == FamilyTag::OutOfScope) throw Error(ErrorCode::InvalidArgument, "unknown family " + item);
    if (std::find(out.begin(), out.end(), *tag) == out.end()) out.push_back(*tag);
  }
  return out;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + output);
  out << text;
}

// ------------------------------------------------------------------ analyze

struct AnalyzeOptions {
  std::string input;
  std::string format = "el";
  bool json = false;
  bool strict = false;
  bool no_oracle = false;
  std::size_t cap = kDefaultCycleCap;
};

void print_report(std::ostream& out, const char* title, const AnalysisReport& r) {
  out << title << ":\n";
  out << "  alpha " << r.alpha << ", mu " << r.mu << "\n";
  out << "  core " << r.core.to_string() << "\n";
  out << "  corona " << r.corona.to_string() << "\n";
  if (r.ge) out << "  gallai-edmonds D=" << r.ge->D.to_string() << " A=" << r.ge->A.to_string() << " C=" << r.ge->C.to_string() << "\n";
  out << "  |core|+|corona|-2alpha = " << r.identity_value;
  if (r.identity_class) out << " (" << identity_name(*r.identity_class) << ")";
  out << "\n  corona and N(core) partition V: " << (r.partition_holds ? "yes" : "no") << "\n";
}

void print_classification(std::ostream& out, const FamilyClassification& c) {
  out << "family " << family_name(c.tag);
  if (c.reason) out << " (" << *c.reason << ")";
  out << "\n";
  if (c.tag == FamilyTag::OutOfScope) return;
  auto cycle = [](const Cycle& cyc) {
    std::string s;
    for (Vertex v : cyc) s += (s.empty() ? "" : "-") + std::to_string(v);
    return s;
  };
  out << "  C " << cycle(c.C) << "\n";
  if (c.C_prime) out << "  C' " << cycle(*c.C_prime) << "\n";
  if (!c.shared.empty()) out << "  shared " << c.shared.to_string() << "\n";
  if (c.tag == FamilyTag::EvenLinked || c.tag == FamilyTag::OddLinked) {
    out << "  x " << *c.x << ", y " << *c.y << "\n";
    out << "  X " << c.X.to_string() << "\n  A " << c.A.to_string() << "\n  B " << c.B.to_string() << "\n";
  }
}

int cmd_analyze(const AnalyzeOptions& opt) {
  const std::string text = read_input(opt.input);
  Graph g;
  if (opt.format == "g6") {
    std::string line = text.substr(0, text.find('\n'));
    g = parse_graph6(line);
  } else {
    g = parse_edge_list(text);
  }

  std::vector<std::string> warnings;
  FamilyClassification cls;
  try {
    cls = classify(g, /*assume_bicritical=*/false, opt.cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::OracleLimitExceeded || opt.strict) throw;
    warnings.push_back(std::string(e.what()) + "; 2-bicriticality assumed, not checked");
    cls = classify(g, /*assume_bicritical=*/true, opt.cap);
  }

  std::optional<AnalysisReport> predicted;
  std::optional<AnalysisReport> oracle;
  std::vector<StatementResult> statements;
  if (cls.tag != FamilyTag::OutOfScope) {
    predicted = predict(g, cls);
    if (!opt.no_oracle) {
      try {
        oracle = oracle_report(g, cls);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::OracleLimitExceeded || opt.strict) throw;
        warnings.push_back(std::string(e.what()) + "; closed form only");
      }
    }
    if (oracle) predicted->mismatches = compare_reports(*predicted, *oracle);
    statements = check_summary_identities(oracle ? *oracle : *predicted);
  }

  bool mismatch = predicted && !predicted->mismatches.empty();
  for (const auto& s : statements) mismatch = mismatch || s.unexpected();

  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  if (opt.json) {
    Json out{{"n", g.n()}, {"m", g.m()}, {"classification", to_json(cls)}};
    out["closed_form"] = predicted ? to_json(*predicted) : Json(nullptr);
    out["oracle"] = oracle ? to_json(*oracle) : Json(nullptr);
    Json st = Json::array();
    for (const auto& s : statements) st.push_back(to_json(s));
    out["statements"] = st;
    out["warnings"] = warnings;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "n " << g.n() << ", m " << g.m() << "\n";
    print_classification(std::cout, cls);
    if (predicted) print_report(std::cout, "closed form", *predicted);
    if (oracle) print_report(std::cout, "oracle", *oracle);
    if (predicted && oracle) {
      if (predicted->mismatches.empty()) {
        std::cout << "closed form agrees with oracle\n";
      } else {
        std::cout << "MISMATCH on";
        for (const auto& f : predicted->mismatches) std::cout << " " << f;
        std::cout << "\n";
      }
    }
    for (const auto& s : statements) {
      const char* mark = s.unexpected() ? "FAIL" : (s.expected_divergent() ? "DIVERGENT" : "ok");
      std::cout << "  [" << mark << "] " << s.name;
      if (!s.detail.empty()) std::cout << ": " << s.detail;
      std::cout << "\n";
    }
  }
  return mismatch ? kExitMismatch : kExitOk;
}

// ------------------------------------------------------------------- verify

int finish_summary(const VerifySummary& summary, bool json, const std::string& output) {
  emit(json ? to_json(summary).dump(2) + "\n" : summary_text(summary), output);
  std::cerr << "elapsed " << summary.elapsed_seconds << " s\n";
  return summary.exit_code();
}

// ---------------------------------------------------------------------- gen

int cmd_gen(FamilyTag kind, int max_n, int count, std::uint64_t seed, const std::string& out_dir) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be >= 1");
  // Validate the budget before touching the file system.
  if (max_n < minimum_order(kind)) {
    throw Error(ErrorCode::BudgetTooSmall,
                std::string(family_name(kind)) + " needs at least " + std::to_string(minimum_order(kind)) + " vertices");
  }
  fs::create_directories(out_dir);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t sub = instance_seed(seed, kind, i);
    FamilyInstance inst = random_family(kind, max_n, sub);
    const std::string stem = std::string(family_name(kind)) + "_" + std::to_string(i);
    Json sidecar{{"family", family_name(kind)}, {"seed", sub}, {"graph6", to_graph6(inst.graph)}};
    Json recipes = Json::array();
    for (const auto& r : inst.recipes) recipes.push_back(to_json(r));
    sidecar["recipes"] = recipes;

    std::ofstream el(fs::path(out_dir) / (stem + ".el"));
    std::ofstream js(fs::path(out_dir) / (stem + ".json"));
    if (!el || !js) throw Error(ErrorCode::InvalidArgument, "cannot write into " + out_dir);
    el << to_edge_list(inst.graph);
    js << sidecar.dump(2) << "\n";
    std::cout << (fs::path(out_dir) / (stem + ".el")).string() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Independence and matching structure of 2-bicritical graphs with one or two odd cycles"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  auto* an = app.add_subcommand("analyze", "Classify a graph and compare closed form with the oracle");
  an->add_option("input", analyze.input, "Edge-list or graph6 file (default stdin)");
  an->add_option("--format", analyze.format, "Input format")->check(CLI::IsMember({"el", "g6"}));
  an->add_flag("--json", analyze.json, "Emit JSON");
  an->add_flag("--strict", analyze.strict, "Fail instead of skipping oracles above the limit");
  an->add_flag("--no-oracle", analyze.no_oracle, "Closed form only");
  an->add_option("--cap", analyze.cap, "Cycle enumeration cap");

  std::string families = "all";
  VerifyConfig config;
  config.workers = default_workers();
  bool verify_json = false;
  std::string output;
  auto* ve = app.add_subcommand("verify", "Random family sweep: closed form vs oracle");
  ve->add_option("--families", families, "Comma-separated family names or 'all'");
  ve->add_option("--count", config.count, "Instances per family");
  ve->add_option("--max-n", config.max_n, "Size budget");
  ve->add_option("--seed", config.seed, "Seed");
  ve->add_option("--workers", config.workers, "Worker threads");
  ve->add_flag("--json", verify_json, "Emit JSON");
  ve->add_option("--output", output, "Output path (default stdout)");

  std::vector<int> orders;
  double p = 0.5;
  int trials = 100;
  std::uint64_t fraction_seed = 0;
  int fraction_workers = default_workers();
  auto* bf = app.add_subcommand("bicritical-fraction", "Fraction of 2-bicritical graphs in G(n, p)");
  bf->add_option("--n", orders, "Orders, comma separated")->delimiter(',')->required();
  bf->add_option("--p", p, "Edge probability");
  bf->add_option("--trials", trials, "Samples per order");
  bf->add_option("--seed", fraction_seed, "Seed");
  bf->add_option("--workers", fraction_workers, "Worker threads");

  std::string gen_kind;
  int gen_max_n = 20;
  int gen_count = 1;
  std::uint64_t gen_seed = 0;
  std::string out_dir = ".";
  auto* ge = app.add_subcommand("gen", "Write random family members with their recipes");
  ge->add_option("kind", gen_kind, "Family name")->required();
  ge->add_option("max_n,--max-n", gen_max_n, "Size budget");
  ge->add_option("count,--count", gen_count, "Number of instances");
  ge->add_option("--seed", gen_seed, "Seed");
  ge->add_option("--out-dir", out_dir, "Output directory");

  int enum_max_n = kMaxEnumerateOrder;
  int enum_workers = default_workers();
  bool enum_json = false;
  std::string enum_input;
  auto* en = app.add_subcommand("enumerate", "Check every in-scope graph of a graph6 stream");
  en->add_option("input", enum_input, "graph6 file (default stdin)");
  en->add_option("--max-n", enum_max_n, "Largest accepted order")->check(CLI::Range(1, kMaxEnumerateOrder));
  en->add_option("--workers", enum_workers, "Worker threads");
  en->add_flag("--json", enum_json, "Emit JSON");

  int graphs_n = 5;
  bool graphs_connected = false;
  auto* gr = app.add_subcommand("graphs", "List all graphs of one order as graph6, one per isomorphism class");
  gr->add_option("--n", graphs_n, "Order")->required()->check(CLI::Range(1, kMaxEnumerationOrder));
  gr->add_flag("--connected", graphs_connected, "Connected graphs only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*an) return cmd_analyze(analyze);
    if (*ve) {
      config.families = parse_families(families);
      return finish_summary(run_verify(config), verify_json, output);
    }
    if (*bf) {
      std::cout << fraction_csv(bicritical_fraction(orders, p, trials, fraction_seed, fraction_workers));
      return kExitOk;
    }
    if (*ge) {
      auto kind = parse_family(gen_kind);
      if (!kind) throw Error(ErrorCode::InvalidArgument, "unknown family " + gen_kind);
      return cmd_gen(*kind, gen_max_n, gen_count, gen_seed, out_dir);
    }
    if (*en) {
      if (enum_workers < 1) throw Error(ErrorCode::InvalidArgument, "workers must be >= 1");
      VerifySummary summary;
      if (enum_input.empty() || enum_input == "-") {
        summary = run_enumerate(std::cin, enum_max_n, enum_workers);
      } else {
        std::ifstream in(enum_input);
        if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + enum_input);
        summary = run_enumerate(in, enum_max_n, enum_workers);
      }
      if (summary.parsed == 0) {
        std::cerr << "error: no graph6 line parsed (" << summary.parse_errors << " errors)\n";
        return kExitUsage;
      }
      return finish_summary(summary, enum_json, "");
    }
    if (*gr) {
      for (const Graph& g : all_graphs(graphs_n, graphs_connected)) std::cout << to_graph6(g) << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
