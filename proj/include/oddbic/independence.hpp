#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "oddbic/graph.hpp"
#include "oddbic/limits.hpp"

namespace oddbic {

enum class ProfileMethod { Oracle, PolyOct2 };

std::string_view method_name(ProfileMethod m);

struct IndependenceProfile {
  int alpha = 0;
  VertexSet core;
  VertexSet corona;
  std::optional<std::uint64_t> mis_count;  // oracle only
  ProfileMethod method = ProfileMethod::Oracle;
};

// Branch and bound: branch on a maximum-degree vertex, prune with a greedy
// clique cover. Throws Error{OracleLimitExceeded}.
int alpha_exact(const Graph& g, int limit = independence_oracle_limit());

// Calls `visit` with the bitmask of every maximum independent set, in
// lexicographic order of the sorted member lists.
void for_each_mis(const Graph& g, const std::function<void(std::uint64_t)>& visit,
                  int limit = independence_oracle_limit());

std::vector<VertexSet> enumerate_mis(const Graph& g, int limit = independence_oracle_limit());

// core = intersection, corona = union of all maximum independent sets.
IndependenceProfile core_corona_oracle(const Graph& g, int limit = independence_oracle_limit());

// Smallest T (|T| <= 2) with G - T bipartite: the empty set, then
// singletons ascending, then pairs in lexicographic order.
std::optional<VertexSet> find_small_transversal(const Graph& g);

// alpha via the transversal reduction and Koenig's theorem on G - T.
// Throws Error{NoSmallTransversal}.
int alpha_poly_oct2(const Graph& g);

// Membership tests: v in core iff alpha(G - v) = alpha - 1, v in corona iff
// alpha(G - N[v]) = alpha - 1.
IndependenceProfile core_corona_poly(const Graph& g);

// Maximal independent sets of G[allowed], as bitmasks. Requires n <= 64.
std::vector<std::uint64_t> maximal_independent_sets(const Graph& g, std::uint64_t allowed);

// Berge: S is maximum iff every independent T disjoint from S can be matched
// into S. Checked over the maximal such T, which suffices.
bool is_maximum_by_matchability(const Graph& g, const VertexSet& S);

// v in core(G) and S maximum iff every independent T disjoint from S can be
// matched into S - {v}. Requires v in S.
bool in_core_by_matchability(const Graph& g, const VertexSet& S, Vertex v);

}  // namespace oddbic
