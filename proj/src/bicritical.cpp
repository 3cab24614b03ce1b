#include "oddbic/bicritical.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "oddbic/generators.hpp"

namespace oddbic {

namespace {

using Mask = std::uint64_t;

// Depth-first walk over independent sets of exactly `target` vertices in
// lexicographic order; stops at the first S with |N(S)| <= |S|.
class ViolatorSearch {
 public:
  ViolatorSearch(const std::vector<Mask>& adj, int n) : adj_(adj), n_(n) {}

  // Returns true if any independent set of size `target` exists; fills
  // `witness` with the first violator of that size, if any.
  bool level(int target, std::optional<Mask>& witness) {
    target_ = target;
    found_any_ = false;
    witness_.reset();
    walk(0, 0, 0, 0);
    witness = witness_;
    return found_any_;
  }

 private:
  void walk(Vertex from, Mask chosen, Mask closed, int size) {
    if (witness_) return;
    if (size == target_) {
      found_any_ = true;
      Mask nbrs = 0;
      for (Mask rest = chosen; rest != 0; rest &= rest - 1) nbrs |= adj_[static_cast<std::size_t>(std::countr_zero(rest))];
      if (std::popcount(nbrs) <= size) witness_ = chosen;
      return;
    }
    for (Vertex v = from; v < n_; ++v) {
      if (closed & (Mask{1} << v)) continue;
      if (n_ - v < target_ - size) return;
      walk(v + 1, chosen | (Mask{1} << v), closed | adj_[static_cast<std::size_t>(v)], size + 1);
      if (witness_) return;
    }
  }

  const std::vector<Mask>& adj_;
  int n_;
  int target_ = 0;
  bool found_any_ = false;
  std::optional<Mask> witness_;
};

}  // namespace

BicriticalVerdict is_2bicritical(const Graph& g, int limit) {
  require_within_limit(g.n(), limit, "is_2bicritical");
  auto adj = g.neighbor_masks();
  ViolatorSearch search(adj, g.n());
  for (int size = 1; size <= g.n(); ++size) {
    std::optional<Mask> witness;
    bool any = search.level(size, witness);
    if (witness) return {false, VertexSet::from_mask(*witness)};
    if (!any) break;
  }
  return {true, std::nullopt};
}

bool certify_by_recipe(const EarPendantRecipe& recipe) {
  Graph g = build(recipe);
  return is_connected(g);
}

}  // namespace oddbic
