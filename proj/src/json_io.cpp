#include "oddbic/json_io.hpp"

#include "oddbic/error.hpp"

namespace oddbic {

namespace {

Json optional_vertex(const std::optional<Vertex>& v) { return v ? Json(*v) : Json(nullptr); }

Json cycle_json(const Cycle& c) { return Json(c); }

}  // namespace

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", edges}};
}

Json to_json(const Matching& m) {
  Json pairs = Json::array();
  for (auto [u, v] : m.pairs()) pairs.push_back({u, v});
  return {{"pairs", pairs}};
}

Json to_json(const GallaiEdmonds& ge) { return {{"D", to_json(ge.D)}, {"A", to_json(ge.A)}, {"C", to_json(ge.C)}}; }

Json to_json(const IndependenceProfile& p) {
  return {{"alpha", p.alpha},
          {"core", to_json(p.core)},
          {"corona", to_json(p.corona)},
          {"mis_count", p.mis_count ? Json(*p.mis_count) : Json(nullptr)},
          {"method", method_name(p.method)}};
}

Json to_json(const BicriticalVerdict& v) {
  return {{"is_bicritical", v.is_bicritical}, {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
}

Json to_json(const FamilyClassification& c) {
  return {{"tag", family_name(c.tag)},
          {"C", cycle_json(c.C)},
          {"C_prime", c.C_prime ? cycle_json(*c.C_prime) : Json(nullptr)},
          {"shared", to_json(c.shared)},
          {"x", optional_vertex(c.x)},
          {"y", optional_vertex(c.y)},
          {"X", to_json(c.X)},
          {"A", to_json(c.A)},
          {"B", to_json(c.B)},
          {"reason", c.reason ? Json(*c.reason) : Json(nullptr)}};
}

Json to_json(const AnalysisReport& r) {
  return {{"family", family_name(r.family.tag)},
          {"n", r.n},
          {"alpha", r.alpha},
          {"mu", r.mu},
          {"core", to_json(r.core)},
          {"corona", to_json(r.corona)},
          {"ge", r.ge ? to_json(*r.ge) : Json(nullptr)},
          {"identity_class", r.identity_class ? Json(identity_name(*r.identity_class)) : Json(nullptr)},
          {"identity_value", r.identity_value},
          {"partition_holds", r.partition_holds},
          {"provenance", provenance_name(r.provenance)},
          {"mismatches", r.mismatches}};
}

Json to_json(const StatementResult& s) {
  return {{"name", s.name}, {"holds", s.holds}, {"expected", s.expected}, {"detail", s.detail}};
}

Json to_json(const EarPendantRecipe& r) {
  Json base = std::visit(
      [](const auto& b) -> Json {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, OddCycleBase>) {
          return {{"kind", "OddCycle"}, {"len", b.len}};
        } else {
          return {{"kind", "OddK4Homeomorph"}, {"lens", b.lens}};
        }
      },
      r.base);
  Json steps = Json::array();
  for (const auto& step : r.steps) {
    steps.push_back(std::visit(
        [](const auto& s) -> Json {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, EarStep>) {
            return {{"kind", "Ear"}, {"u", s.u}, {"v", s.v}, {"internal_len", s.internal_len}};
          } else {
            return {{"kind", "Pendant"}, {"cycle_len", s.cycle_len}, {"path_len", s.path_len}, {"attach", s.attach}};
          }
        },
        step));
  }
  return {{"base", base}, {"steps", steps}};
}

Graph graph_from_json(const Json& j) {
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph(j.at("n").get<int>(), edges);
}

EarPendantRecipe recipe_from_json(const Json& j) {
  try {
    EarPendantRecipe r;
    const auto& base = j.at("base");
    const auto kind = base.at("kind").get<std::string>();
    if (kind == "OddCycle") {
      r.base = OddCycleBase{base.at("len").get<int>()};
    } else if (kind == "OddK4Homeomorph") {
      r.base = OddK4Base{base.at("lens").get<std::array<int, 6>>()};
    } else {
      throw Error(ErrorCode::InvalidRecipeStep, "unknown base kind " + kind);
    }
    for (const auto& s : j.value("steps", Json::array())) {
      const auto step_kind = s.at("kind").get<std::string>();
      if (step_kind == "Ear") {
        r.steps.emplace_back(EarStep{s.at("u").get<int>(), s.at("v").get<int>(), s.at("internal_len").get<int>()});
      } else if (step_kind == "Pendant") {
        r.steps.emplace_back(
            PendantStep{s.at("cycle_len").get<int>(), s.at("path_len").get<int>(), s.at("attach").get<int>()});
      } else {
        throw Error(ErrorCode::InvalidRecipeStep, "unknown step kind " + step_kind);
      }
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidRecipeStep, e.what());
  }
}

}  // namespace oddbic
