#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddbic/graph.hpp"

namespace oddbic {

using Cycle = std::vector<Vertex>;

struct CycleList {
  // Canonical form: starts at the minimum vertex, and the smaller of its two
  // cycle neighbours comes second. Sorted lexicographically.
  std::vector<Cycle> cycles;
  int odd_count = 0;
  // Set when enumeration stopped early; counts are then lower bounds.
  bool truncated = false;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

// Backtracking simple-cycle enumeration: every cycle is discovered once,
// from its minimum vertex, in its canonical direction. Stops after `cap`
// cycles or, if given, as soon as more than `odd_stop` odd cycles are seen.
CycleList enumerate_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap,
                           std::optional<int> odd_stop = std::nullopt);

enum class FamilyTag { OneOddCycle, FusedOdd, EvenLinked, OddLinked, DisconnectedPair, OutOfScope };

std::string_view family_name(FamilyTag tag);
std::optional<FamilyTag> parse_family(std::string_view name);

// The five generatable families, in a fixed order.
const std::vector<FamilyTag>& in_scope_families();

struct FamilyClassification {
  FamilyTag tag = FamilyTag::OutOfScope;
  Cycle C;
  std::optional<Cycle> C_prime;
  VertexSet shared;  // fused-odd: V(C) & V(C')
  // Linked: attachment vertices of C and C'. Fused-odd with a single shared
  // vertex stores it in x.
  std::optional<Vertex> x;
  std::optional<Vertex> y;
  VertexSet X;  // linked: degree-2 vertices of V(C) | V(C')
  VertexSet A;  // linked: bipartition of G - X, x in A
  VertexSet B;
  std::optional<std::string> reason;  // OutOfScope only

  VertexSet cycle_vertices() const;  // V(C) | V(C')
};

// Tags a graph with at most two odd cycles by family and extracts the
// structural witnesses. Unless `assume_bicritical`, 2-bicriticality is
// checked first (Error{OracleLimitExceeded} above the oracle limit).
// Throws Error{StructureViolation} when the odd-cycle count is in range but
// the graph fits none of the families.
FamilyClassification classify(const Graph& g, bool assume_bicritical, std::size_t cycle_cap = kDefaultCycleCap);

}  // namespace oddbic
