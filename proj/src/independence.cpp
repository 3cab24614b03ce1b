#include "oddbic/independence.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

#include "oddbic/error.hpp"
#include "oddbic/matching.hpp"

namespace oddbic {

namespace {

std::optional<int> env_limit() {
  const char* raw = std::getenv("ODDBIC_ORACLE_LIMIT");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc{} || *ptr != '\0' || value < 1) return std::nullopt;
  return std::min(value, kHardOracleCap);
}

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

Mask all_vertices(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

int popcount(Mask m) { return std::popcount(m); }

Vertex lowest(Mask m) { return std::countr_zero(m); }

// Upper bound on alpha(G[cand]): number of cliques in a greedy clique cover.
int clique_cover_bound(const std::vector<Mask>& adj, Mask cand) {
  int cliques = 0;
  while (cand != 0) {
    Vertex v = lowest(cand);
    Mask clique = bit(v);
    Mask grow = cand & adj[static_cast<std::size_t>(v)];
    while (grow != 0) {
      Vertex w = lowest(grow);
      clique |= bit(w);
      grow &= adj[static_cast<std::size_t>(w)];
    }
    cand &= ~clique;
    ++cliques;
  }
  return cliques;
}

class AlphaSearch {
 public:
  explicit AlphaSearch(const std::vector<Mask>& adj) : adj_(adj) {}

  int solve(Mask cand) {
    best_ = 0;
    search(cand, 0);
    return best_;
  }

 private:
  void search(Mask cand, int size) {
    if (cand == 0) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + clique_cover_bound(adj_, cand) <= best_) return;

    Vertex pick = -1;
    int pick_degree = -1;
    for (Mask rest = cand; rest != 0; rest &= rest - 1) {
      Vertex v = lowest(rest);
      int d = popcount(adj_[static_cast<std::size_t>(v)] & cand);
      if (d <= 1) {
        // A vertex of degree <= 1 lies in some maximum independent set.
        search(cand & ~(adj_[static_cast<std::size_t>(v)] | bit(v)), size + 1);
        return;
      }
      if (d > pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    search(cand & ~(adj_[static_cast<std::size_t>(pick)] | bit(pick)), size + 1);
    search(cand & ~bit(pick), size);
  }

  const std::vector<Mask>& adj_;
  int best_ = 0;
};

class MisEnumerator {
 public:
  MisEnumerator(const std::vector<Mask>& adj, int alpha, const std::function<void(Mask)>& visit)
      : adj_(adj), alpha_(alpha), visit_(visit) {}

  void run(Mask cand) { search(cand, 0, 0); }

 private:
  void search(Mask cand, Mask chosen, int size) {
    if (size + clique_cover_bound(adj_, cand) < alpha_) return;
    if (cand == 0) {
      if (size == alpha_) visit_(chosen);
      return;
    }
    Vertex v = lowest(cand);
    search(cand & ~(adj_[static_cast<std::size_t>(v)] | bit(v)), chosen | bit(v), size + 1);
    search(cand & ~bit(v), chosen, size);
  }

  const std::vector<Mask>& adj_;
  int alpha_;
  const std::function<void(Mask)>& visit_;
};

int alpha_of_mask(const std::vector<Mask>& adj, Mask cand) { return AlphaSearch(adj).solve(cand); }

int bipartite_alpha(const Graph& g, const VertexSet& alive) {
  auto sub = induced_subgraph(g, alive);
  auto parts = bipartition(sub.graph);
  if (!parts) throw std::logic_error("bipartite_alpha: subgraph is not bipartite");
  return sub.graph.n() - bipartite_maximum_matching(sub.graph, parts->first).size();
}

// alpha(G[alive]) given T with G[alive] - T bipartite.
int alpha_with_transversal(const Graph& g, const VertexSet& alive, const VertexSet& transversal) {
  VertexSet t = transversal.intersect(alive);
  const auto& members = t.members();
  int best = 0;
  for (unsigned subset = 0; subset < (1u << members.size()); ++subset) {
    std::vector<Vertex> picked;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (subset & (1u << i)) picked.push_back(members[i]);
    }
    VertexSet chosen(std::move(picked));
    if (!is_independent(g, chosen)) continue;
    VertexSet rest = alive.minus(t).minus(neighborhood(g, chosen));
    best = std::max(best, static_cast<int>(chosen.size()) + bipartite_alpha(g, rest));
  }
  return best;
}

void collect_maximal(const std::vector<Mask>& adj, Mask allowed, Mask cand, Mask chosen, Mask excluded,
                     std::vector<Mask>& out) {
  if (cand == 0) {
    // Maximal iff no excluded vertex could still be added.
    for (Mask rest = excluded; rest != 0; rest &= rest - 1) {
      Vertex v = lowest(rest);
      if ((adj[static_cast<std::size_t>(v)] & chosen) == 0) return;
    }
    out.push_back(chosen);
    return;
  }
  Vertex v = lowest(cand);
  collect_maximal(adj, allowed, cand & ~(adj[static_cast<std::size_t>(v)] | bit(v)), chosen | bit(v), excluded, out);
  collect_maximal(adj, allowed, cand & ~bit(v), chosen, excluded | bit(v), out);
}

}  // namespace

int independence_oracle_limit() { return env_limit().value_or(kDefaultIndependenceLimit); }

int bicritical_oracle_limit() { return env_limit().value_or(kDefaultBicriticalLimit); }

void require_within_limit(int n, int limit, const char* what) {
  limit = std::min(limit, kHardOracleCap);
  if (n > limit) {
    throw Error(ErrorCode::OracleLimitExceeded,
                std::string(what) + ": n=" + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  }
}

std::string_view method_name(ProfileMethod m) { return m == ProfileMethod::Oracle ? "Oracle" : "PolyOct2"; }

int alpha_exact(const Graph& g, int limit) {
  require_within_limit(g.n(), limit, "alpha_exact");
  auto adj = g.neighbor_masks();
  return alpha_of_mask(adj, all_vertices(g.n()));
}

void for_each_mis(const Graph& g, const std::function<void(std::uint64_t)>& visit, int limit) {
  require_within_limit(g.n(), limit, "enumerate_mis");
  auto adj = g.neighbor_masks();
  Mask everything = all_vertices(g.n());
  MisEnumerator(adj, alpha_of_mask(adj, everything), visit).run(everything);
}

std::vector<VertexSet> enumerate_mis(const Graph& g, int limit) {
  std::vector<VertexSet> out;
  for_each_mis(g, [&](Mask m) { out.push_back(VertexSet::from_mask(m)); }, limit);
  std::sort(out.begin(), out.end());
  return out;
}

IndependenceProfile core_corona_oracle(const Graph& g, int limit) {
  Mask inter = all_vertices(g.n());
  Mask uni = 0;
  std::uint64_t count = 0;
  for_each_mis(g, [&](Mask m) {
    inter &= m;
    uni |= m;
    ++count;
  }, limit);
  IndependenceProfile p;
  p.alpha = g.n() == 0 ? 0 : alpha_exact(g, limit);
  p.core = VertexSet::from_mask(inter);
  p.corona = VertexSet::from_mask(uni);
  p.mis_count = count;
  p.method = ProfileMethod::Oracle;
  return p;
}

std::optional<VertexSet> find_small_transversal(const Graph& g) {
  auto bipartite_without = [&](const VertexSet& t) { return bipartition(remove_vertices(g, t).graph).has_value(); };
  if (bipartition(g)) return VertexSet{};
  for (Vertex v = 0; v < g.n(); ++v) {
    if (bipartite_without({v})) return VertexSet{v};
  }
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (bipartite_without({u, v})) return VertexSet{u, v};
    }
  }
  return std::nullopt;
}

int alpha_poly_oct2(const Graph& g) {
  auto t = find_small_transversal(g);
  if (!t) throw Error(ErrorCode::NoSmallTransversal, "no transversal of size <= 2");
  return alpha_with_transversal(g, VertexSet::range(g.n()), *t);
}

IndependenceProfile core_corona_poly(const Graph& g) {
  auto t = find_small_transversal(g);
  if (!t) throw Error(ErrorCode::NoSmallTransversal, "no transversal of size <= 2");
  const VertexSet everything = VertexSet::range(g.n());
  IndependenceProfile p;
  p.method = ProfileMethod::PolyOct2;
  p.alpha = alpha_with_transversal(g, everything, *t);
  std::vector<Vertex> core, corona;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (alpha_with_transversal(g, everything.minus({v}), *t) == p.alpha - 1) core.push_back(v);
    VertexSet closed = neighborhood(g, {v}).unite({v});
    if (alpha_with_transversal(g, everything.minus(closed), *t) == p.alpha - 1) corona.push_back(v);
  }
  p.core = VertexSet(std::move(core));
  p.corona = VertexSet(std::move(corona));
  return p;
}

std::vector<std::uint64_t> maximal_independent_sets(const Graph& g, std::uint64_t allowed) {
  require_within_limit(g.n(), kHardOracleCap, "maximal_independent_sets");
  auto adj = g.neighbor_masks();
  for (auto& a : adj) a &= allowed;
  std::vector<Mask> out;
  collect_maximal(adj, allowed, allowed, 0, 0, out);
  return out;
}

bool is_maximum_by_matchability(const Graph& g, const VertexSet& S) {
  if (!is_independent(g, S)) return false;
  Mask rest = all_vertices(g.n()) & ~S.mask();
  for (Mask t : maximal_independent_sets(g, rest)) {
    if (!can_match_into(g, VertexSet::from_mask(t), S)) return false;
  }
  return true;
}

bool in_core_by_matchability(const Graph& g, const VertexSet& S, Vertex v) {
  if (!S.contains(v) || !is_independent(g, S)) return false;
  VertexSet target = S.minus({v});
  Mask rest = all_vertices(g.n()) & ~S.mask();
  for (Mask t : maximal_independent_sets(g, rest)) {
    if (!can_match_into(g, VertexSet::from_mask(t), target)) return false;
  }
  return true;
}

}  // namespace oddbic
