#pragma once

#include <optional>

#include "oddbic/graph.hpp"
#include "oddbic/limits.hpp"

namespace oddbic {

struct EarPendantRecipe;

struct BicriticalVerdict {
  bool is_bicritical = false;
  // A nonempty independent S with |N(S)| <= |S|; present iff not bicritical.
  std::optional<VertexSet> witness;
};

// Exhaustive check of |N(S)| > |S| over nonempty independent sets, by
// increasing size and then lexicographically; the first violator is the
// witness. Throws Error{OracleLimitExceeded}.
BicriticalVerdict is_2bicritical(const Graph& g, int limit = bicritical_oracle_limit());

// Replays the recipe, re-validating every step (Error{InvalidRecipeStep}).
// A valid recipe certifies 2-bicriticality of the connected result.
bool certify_by_recipe(const EarPendantRecipe& recipe);

}  // namespace oddbic
