#include "oddbic/generators.hpp"

#include <set>

#include "oddbic/error.hpp"
#include "oddbic/matching.hpp"

namespace oddbic {

int Rng::uniform_int(int lo, int hi) {
  if (hi <= lo) return lo;
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t draw = next();
  while (draw >= limit) draw = next();
  return lo + static_cast<int>(draw % range);
}

namespace {

[[noreturn]] void bad_step(std::size_t index, const std::string& what) {
  throw Error(ErrorCode::InvalidRecipeStep, "step " + std::to_string(index) + ": " + what);
}

class RecipeReplay {
 public:
  Graph run(const EarPendantRecipe& recipe) {
    std::visit([&](const auto& base) { apply_base(base); }, recipe.base);
    for (std::size_t i = 0; i < recipe.steps.size(); ++i) {
      std::visit([&](const auto& step) { apply(i + 1, step); }, recipe.steps[i]);
    }
    return Graph(n_, std::vector<Edge>(edges_.begin(), edges_.end()));
  }

 private:
  Vertex fresh() { return n_++; }

  void connect(std::size_t index, Vertex u, Vertex v) {
    Edge e{std::min(u, v), std::max(u, v)};
    if (u == v || !edges_.insert(e).second) {
      bad_step(index, "edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
    }
  }

  void path(std::size_t index, Vertex from, Vertex to, int internal) {
    Vertex prev = from;
    for (int i = 0; i < internal; ++i) {
      Vertex w = fresh();
      connect(index, prev, w);
      prev = w;
    }
    connect(index, prev, to);
  }

  void apply_base(const OddCycleBase& base) {
    if (base.len < 3 || base.len % 2 == 0) bad_step(0, "base cycle length must be odd and >= 3");
    n_ = base.len;
    for (Vertex v = 0; v < base.len; ++v) connect(0, v, (v + 1) % base.len);
  }

  void apply_base(const OddK4Base& base) {
    static constexpr std::array<Edge, 6> kCorners{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    n_ = 4;
    for (std::size_t i = 0; i < kCorners.size(); ++i) {
      int len = base.lens[i];
      if (len < 1 || len % 2 == 0) bad_step(0, "K4 subdivision lengths must be odd");
      path(0, kCorners[i].first, kCorners[i].second, len - 1);
    }
  }

  void apply(std::size_t index, const EarStep& ear) {
    if (ear.u < 0 || ear.u >= n_ || ear.v < 0 || ear.v >= n_) bad_step(index, "ear endpoint not in current graph");
    if (ear.internal_len < 0 || ear.internal_len % 2 != 0) bad_step(index, "ear length must be odd");
    if (ear.u == ear.v && ear.internal_len < 2) bad_step(index, "closed ear needs at least two internal vertices");
    path(index, ear.u, ear.v, ear.internal_len);
  }

  void apply(std::size_t index, const PendantStep& pendant) {
    if (pendant.cycle_len < 3 || pendant.cycle_len % 2 == 0) bad_step(index, "pendant cycle length must be odd and >= 3");
    if (pendant.path_len < 1) bad_step(index, "pendant path length must be positive");
    if (pendant.attach < 0 || pendant.attach >= n_) bad_step(index, "pendant end not in current graph");
    Vertex prev = pendant.attach;
    for (int i = 0; i + 1 < pendant.path_len; ++i) {
      Vertex w = fresh();
      connect(index, prev, w);
      prev = w;
    }
    Vertex first = fresh();
    connect(index, prev, first);
    Vertex last = first;
    for (int i = 1; i < pendant.cycle_len; ++i) {
      Vertex w = fresh();
      connect(index, last, w);
      last = w;
    }
    connect(index, last, first);
  }

  int n_ = 0;
  std::set<Edge> edges_;
};

// Uniform over lo, lo + 2, ..., keeping the parity of lo.
int random_step2(Rng& rng, int lo, int hi) { return lo + 2 * rng.uniform_int(0, (hi - lo) / 2); }

EarPendantRecipe fused_recipe(Rng& rng, int budget) {
  for (;;) {
    int len = random_step2(rng, 3, budget);
    int room = budget - len;
    Vertex u = rng.uniform_int(0, len - 1);
    if (room >= 2 && rng.bernoulli(0.5)) {
      return {OddCycleBase{len}, {EarStep{u, u, random_step2(rng, 2, room)}}};
    }
    int offset = rng.uniform_int(1, len - 1);
    Vertex v = (u + offset) % len;
    int min_internal = (offset == 1 || offset == len - 1) ? 2 : 0;
    if (min_internal > room) continue;
    return {OddCycleBase{len}, {EarStep{u, v, random_step2(rng, min_internal, room)}}};
  }
}

EarPendantRecipe linked_recipe(Rng& rng, int budget, bool even) {
  const int min_path = even ? 2 : 1;
  int slack = budget - (5 + min_path);
  int a = random_step2(rng, 3, 3 + slack);
  slack -= a - 3;
  int b = random_step2(rng, 3, 3 + slack);
  slack -= b - 3;
  int k = random_step2(rng, min_path, min_path + slack);  // steps of two keep the parity
  slack -= k - min_path;
  Vertex x = rng.uniform_int(0, a - 1);

  EarPendantRecipe recipe{OddCycleBase{a}, {PendantStep{b, k, x}}};
  // P = x, a, a+1, ..., a+k-2, y with y = a+k-1.
  std::vector<Vertex> p{x};
  for (int i = 0; i < k; ++i) p.push_back(a + i);

  std::set<std::pair<int, int>> chords;
  int ears = rng.uniform_int(0, 3);
  for (int e = 0; e < ears; ++e) {
    int i = rng.uniform_int(0, k - 1);
    int j = i + 1 + 2 * rng.uniform_int(0, (k - i - 1) / 2);
    bool adjacent = j - i == 1 || chords.contains({i, j});
    int min_internal = adjacent ? 2 : 0;
    if (min_internal > slack) continue;
    int internal = random_step2(rng, min_internal, slack);
    if (internal == 0) chords.insert({i, j});
    slack -= internal;
    recipe.steps.push_back(EarStep{p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)], internal});
  }
  return recipe;
}

}  // namespace

Graph build(const EarPendantRecipe& recipe) { return RecipeReplay().run(recipe); }

int minimum_order(FamilyTag kind) {
  switch (kind) {
    case FamilyTag::OneOddCycle: return 3;
    case FamilyTag::FusedOdd: return 5;
    case FamilyTag::EvenLinked: return 7;
    case FamilyTag::OddLinked: return 6;
    case FamilyTag::DisconnectedPair: return 6;
    case FamilyTag::OutOfScope: break;
  }
  throw Error(ErrorCode::InvalidArgument, "OutOfScope is not a generatable family");
}

FamilyInstance random_family(FamilyTag kind, int size_budget, std::uint64_t seed) {
  const int minimum = minimum_order(kind);
  if (size_budget < minimum) {
    throw Error(ErrorCode::BudgetTooSmall, std::string(family_name(kind)) + " needs at least " +
                                               std::to_string(minimum) + " vertices");
  }
  Rng rng(seed);
  FamilyInstance out;
  out.family = kind;
  switch (kind) {
    case FamilyTag::OneOddCycle:
      out.recipes.push_back({OddCycleBase{random_step2(rng, 3, size_budget)}, {}});
      break;
    case FamilyTag::FusedOdd:
      out.recipes.push_back(fused_recipe(rng, size_budget));
      break;
    case FamilyTag::EvenLinked:
    case FamilyTag::OddLinked:
      out.recipes.push_back(linked_recipe(rng, size_budget, kind == FamilyTag::EvenLinked));
      break;
    case FamilyTag::DisconnectedPair: {
      int a = random_step2(rng, 3, size_budget - 3);
      int b = random_step2(rng, 3, size_budget - a);
      out.recipes.push_back({OddCycleBase{a}, {}});
      out.recipes.push_back({OddCycleBase{b}, {}});
      break;
    }
    case FamilyTag::OutOfScope:
      break;
  }
  out.graph = build(out.recipes.front());
  for (std::size_t i = 1; i < out.recipes.size(); ++i) out.graph = disjoint_union(out.graph, build(out.recipes[i]));
  return out;
}

CompanionGraph companion_H(const Graph& g, const FamilyClassification& cls) {
  if (cls.tag != FamilyTag::EvenLinked && cls.tag != FamilyTag::OddLinked) {
    throw Error(ErrorCode::WrongFamily, std::string(family_name(cls.tag)) + " has no companion graph");
  }
  const Vertex x = *cls.x;
  const Vertex y = *cls.y;
  const Vertex w1 = g.n();
  const Vertex w2 = g.n() + 1;

  struct Candidate {
    const char* name;
    int extra;
    std::vector<Edge> edges;
  };
  Candidate single{"single-vertex", 1, {{x, w1}, {y, w1}}};
  Candidate path{"two-vertex-path", 2, {{x, w1}, {w1, w2}, {w2, y}}};
  std::vector<Candidate> order = cls.tag == FamilyTag::EvenLinked ? std::vector{single, path} : std::vector{path, single};

  for (const auto& cand : order) {
    CompanionGraph out;
    out.H = with_added_vertices(g, cand.extra, cand.edges);
    std::vector<Vertex> added;
    for (int i = 0; i < cand.extra; ++i) added.push_back(g.n() + i);
    out.added = VertexSet(std::move(added));
    out.augmentation = cand.name;
    out.without_X = remove_vertices(out.H, cls.X);
    if (bipartition(out.without_X.graph) && is_matching_covered(out.without_X.graph)) return out;
  }
  throw Error(ErrorCode::StructureViolation, "no augmentation makes H - X bipartite and matching-covered");
}

Graph random_factor_critical(int size_budget, std::uint64_t seed) {
  if (size_budget < 3) throw Error(ErrorCode::BudgetTooSmall, "factor-critical graphs need at least 3 vertices");
  Rng rng(seed);
  EarPendantRecipe recipe{OddCycleBase{random_step2(rng, 3, size_budget)}, {}};
  Graph g = build(recipe);
  int ears = rng.uniform_int(0, 4);
  for (int e = 0; e < ears; ++e) {
    int room = size_budget - g.n();
    Vertex u = rng.uniform_int(0, g.n() - 1);
    Vertex v = rng.uniform_int(0, g.n() - 1);
    int min_internal = (u == v || g.has_edge(u, v)) ? 2 : 0;
    if (min_internal > room) continue;
    recipe.steps.push_back(EarStep{u, v, random_step2(rng, min_internal, room)});
    g = build(recipe);
  }
  return g;
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "random_gnp needs n >= 0 and p in [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

}  // namespace oddbic
