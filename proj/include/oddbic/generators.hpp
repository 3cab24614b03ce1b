#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "oddbic/family.hpp"
#include "oddbic/graph.hpp"

namespace oddbic {

// ------------------------------------------------------------------ seeding

// SplitMix64 finaliser (Steele, Lea & Flood constants).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Sub-seed for work item `index` of a stream seeded with `seed`:
// mix64(seed ^ mix64(index)). Stable across platforms and releases.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return mix64(seed ^ mix64(index)); }

// mt19937_64 with hand-written reductions; std distributions are not
// portable across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [lo, hi], by rejection.
  int uniform_int(int lo, int hi);
  // Uniform in [0, 1) with 53 bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

// ------------------------------------------------------------------ recipes

struct OddCycleBase {
  int len = 3;
  friend bool operator==(const OddCycleBase&, const OddCycleBase&) = default;
};

// K4 on corners 0..3 with each edge subdivided into an odd-length path. The
// six lengths follow the edge order 01, 02, 03, 12, 13, 23.
struct OddK4Base {
  std::array<int, 6> lens{1, 1, 1, 1, 1, 1};
  friend bool operator==(const OddK4Base&, const OddK4Base&) = default;
};

// Odd-length path u ... v through `internal_len` fresh vertices (u == v
// gives a closed ear).
struct EarStep {
  Vertex u = 0;
  Vertex v = 0;
  int internal_len = 0;
  friend bool operator==(const EarStep&, const EarStep&) = default;
};

// A fresh odd cycle joined to `attach` by a path of `path_len` edges. Fresh
// vertices are numbered along the path first, then around the cycle
// starting at the path's far end.
struct PendantStep {
  int cycle_len = 3;
  int path_len = 1;
  Vertex attach = 0;
  friend bool operator==(const PendantStep&, const PendantStep&) = default;
};

using RecipeBase = std::variant<OddCycleBase, OddK4Base>;
using RecipeStep = std::variant<EarStep, PendantStep>;

struct EarPendantRecipe {
  RecipeBase base = OddCycleBase{};
  std::vector<RecipeStep> steps;
  friend bool operator==(const EarPendantRecipe&, const EarPendantRecipe&) = default;
};

// Replays the recipe; new vertices are numbered consecutively.
// Throws Error{InvalidRecipeStep}.
Graph build(const EarPendantRecipe& recipe);

// A generated family member. Connected families have one recipe; a
// disconnected pair has one per component, the second shifted after the first.
struct FamilyInstance {
  FamilyTag family = FamilyTag::OutOfScope;
  Graph graph;
  std::vector<EarPendantRecipe> recipes;
};

int minimum_order(FamilyTag kind);

// Throws Error{BudgetTooSmall} or Error{InvalidArgument} for OutOfScope.
FamilyInstance random_family(FamilyTag kind, int size_budget, std::uint64_t seed);

// ---------------------------------------------------------- companion graph

struct CompanionGraph {
  Graph H;                    // G plus the fictitious vertices
  VertexSet added;            // ids of the fictitious vertices
  std::string augmentation;   // "single-vertex" or "two-vertex-path"
  Subgraph without_X;         // H - X
};

// Adds fictitious vertices joining x and y so that H - X is bipartite and
// matching-covered. Both augmentations are tried, the one expected for the
// parity first, and the result is verified. Throws Error{WrongFamily} for
// non-linked inputs and Error{StructureViolation} if neither verifies.
CompanionGraph companion_H(const Graph& g, const FamilyClassification& cls);

// Odd cycle plus random odd ears. Throws Error{BudgetTooSmall}.
Graph random_factor_critical(int size_budget, std::uint64_t seed);

// G(n, p): each pair (u < v), in lexicographic order, is kept when the next
// uniform draw is below p.
Graph random_gnp(int n, double p, std::uint64_t seed);

}  // namespace oddbic
