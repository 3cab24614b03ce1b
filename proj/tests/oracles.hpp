#pragma once

// Brute-force reference implementations. Deliberately naive: subsets are
// enumerated directly, nothing is shared with the library's search code.

#include <bit>
#include <cstdint>
#include <vector>

#include "oddbic/graph.hpp"

namespace oracle {

using oddbic::Graph;
using oddbic::VertexSet;

inline std::vector<std::uint64_t> adjacency(const Graph& g) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.n()), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
  }
  return adj;
}

inline bool independent(const std::vector<std::uint64_t>& adj, std::uint64_t s) {
  for (std::uint64_t r = s; r; r &= r - 1) {
    if (adj[std::countr_zero(r)] & s) return false;
  }
  return true;
}

inline std::uint64_t neighbours(const std::vector<std::uint64_t>& adj, std::uint64_t s) {
  std::uint64_t out = 0;
  for (std::uint64_t r = s; r; r &= r - 1) out |= adj[std::countr_zero(r)];
  return out;
}

// All maximum independent sets, by scanning every subset. n <= ~20.
inline std::vector<std::uint64_t> all_mis(const Graph& g) {
  const auto adj = adjacency(g);
  const std::uint64_t total = std::uint64_t{1} << g.n();
  int best = 0;
  std::vector<std::uint64_t> out{0};
  for (std::uint64_t s = 1; s < total; ++s) {
    if (!independent(adj, s)) continue;
    int k = std::popcount(s);
    if (k > best) {
      best = k;
      out.clear();
    }
    if (k == best) out.push_back(s);
  }
  return out;
}

inline int alpha(const Graph& g) { return std::popcount(all_mis(g).front()); }

struct CoreCorona {
  int alpha;
  VertexSet core;
  VertexSet corona;
};

inline CoreCorona core_corona(const Graph& g) {
  auto sets = all_mis(g);
  std::uint64_t meet = ~std::uint64_t{0} >> (64 - std::max(g.n(), 1));
  if (g.n() == 0) meet = 0;
  std::uint64_t join = 0;
  for (auto s : sets) {
    meet &= s;
    join |= s;
  }
  return {std::popcount(sets.front()), VertexSet::from_mask(meet), VertexSet::from_mask(join)};
}

// Matching number by recursion on the lowest uncovered vertex, memoised on
// the remaining vertex set. n <= ~22.
inline int mu(const Graph& g) {
  const auto adj = adjacency(g);
  std::vector<int> memo;
  const bool use_memo = g.n() <= 22;
  if (use_memo) memo.assign(std::size_t{1} << g.n(), -1);
  auto rec = [&](auto&& self, std::uint64_t alive) -> int {
    if (alive == 0) return 0;
    if (use_memo && memo[alive] >= 0) return memo[alive];
    int v = std::countr_zero(alive);
    std::uint64_t rest = alive & ~(std::uint64_t{1} << v);
    int best = self(self, rest);
    for (std::uint64_t r = adj[v] & rest; r; r &= r - 1) {
      int w = std::countr_zero(r);
      best = std::max(best, 1 + self(self, rest & ~(std::uint64_t{1} << w)));
    }
    if (use_memo) memo[alive] = best;
    return best;
  };
  return rec(rec, g.n() == 0 ? 0 : (~std::uint64_t{0} >> (64 - g.n())));
}

inline int mu_without(const Graph& g, const VertexSet& drop) {
  return mu(oddbic::isolate_vertices(g, drop));
}

struct GE {
  VertexSet D, A, C;
};

// Straight from the definitions: D = {v : mu(G - v) = mu(G)},
// A = N(D) - D, C = the rest.
inline GE gallai_edmonds(const Graph& g) {
  const int m = mu(g);
  std::vector<oddbic::Vertex> d;
  for (oddbic::Vertex v = 0; v < g.n(); ++v) {
    if (mu_without(g, {v}) == m) d.push_back(v);
  }
  VertexSet D(d);
  VertexSet A = oddbic::neighborhood(g, D).minus(D);
  VertexSet C = VertexSet::range(g.n()).minus(D).minus(A);
  return {D, A, C};
}

// Every nonempty independent S has |N(S)| > |S|.
inline bool bicritical(const Graph& g) {
  const auto adj = adjacency(g);
  const std::uint64_t total = std::uint64_t{1} << g.n();
  for (std::uint64_t s = 1; s < total; ++s) {
    if (independent(adj, s) && std::popcount(neighbours(adj, s)) <= std::popcount(s)) return false;
  }
  return true;
}

}  // namespace oracle
