#pragma once

#include <json.hpp>

#include "oddbic/bicritical.hpp"
#include "oddbic/closed_form.hpp"
#include "oddbic/family.hpp"
#include "oddbic/generators.hpp"
#include "oddbic/graph.hpp"
#include "oddbic/independence.hpp"
#include "oddbic/matching.hpp"

namespace oddbic {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const Graph& g);  // {"n":..,"edges":[[u,v],..]}
Json to_json(const Matching& m);
Json to_json(const GallaiEdmonds& ge);
Json to_json(const IndependenceProfile& p);
Json to_json(const BicriticalVerdict& v);
Json to_json(const FamilyClassification& c);
Json to_json(const AnalysisReport& r);
Json to_json(const StatementResult& s);
Json to_json(const EarPendantRecipe& r);

Graph graph_from_json(const Json& j);
// Throws Error{InvalidRecipeStep} on schema errors.
EarPendantRecipe recipe_from_json(const Json& j);

}  // namespace oddbic
