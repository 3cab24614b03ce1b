#pragma once

#include <optional>
#include <vector>

#include "oddbic/graph.hpp"

namespace oddbic {

// A set of pairwise disjoint edges, stored as a mate array.
class Matching {
 public:
  Matching() = default;
  explicit Matching(int n) : mate_(static_cast<std::size_t>(n), -1) {}

  int n() const { return static_cast<int>(mate_.size()); }
  int size() const { return size_; }
  bool covers(Vertex v) const { return mate_[static_cast<std::size_t>(v)] != -1; }
  // M(v): the partner of v, or v itself when v is exposed.
  Vertex partner(Vertex v) const { return covers(v) ? mate_[static_cast<std::size_t>(v)] : v; }

  void add(Vertex u, Vertex v);
  void remove(Vertex u);

  // (u, v) with u < v, sorted.
  std::vector<Edge> pairs() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Vertex> mate_;
  int size_ = 0;
};

bool is_matching_of(const Graph& g, const Matching& m);

// Edmonds' blossom algorithm. Exposed roots are grown in ascending order and
// neighbours are scanned in ascending order, so the result is deterministic.
Matching maximum_matching(const Graph& g);
int matching_number(const Graph& g);

// Augmenting-path matching between `left` and the rest of a bipartite graph.
Matching bipartite_maximum_matching(const Graph& g, const VertexSet& left);

struct GallaiEdmonds {
  VertexSet D;
  VertexSet A;
  VertexSet C;

  friend bool operator==(const GallaiEdmonds&, const GallaiEdmonds&) = default;
};

// D is computed from its definition, mu(G - v) == mu(G). The structure
// theorem's conclusions are asserted on the result (std::logic_error).
GallaiEdmonds gallai_edmonds(const Graph& g);

bool is_factor_critical(const Graph& g);
bool is_matching_covered(const Graph& g);

// A matching saturating every t in T with a distinct neighbour in S, if one
// exists. Throws Error{OverlappingSets} when T and S intersect.
std::optional<Matching> can_match_into(const Graph& g, const VertexSet& T, const VertexSet& S);

}  // namespace oddbic
