#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddbic {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  static VertexSet range(int n);  // {0, ..., n-1}
  static VertexSet from_mask(std::uint64_t mask);

  bool contains(Vertex v) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  // Only valid when every member is below 64.
  std::uint64_t mask() const;

  VertexSet unite(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  bool disjoint_from(const VertexSet& other) const;

  std::string to_string() const;  // "{0,2,5}"

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Finite undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adjacency_(static_cast<std::size_t>(n)) {}
  // Throws Error{VertexOutOfRange | SelfLoop | DuplicateEdge}.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int n() const { return static_cast<int>(adjacency_.size()); }
  int m() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex u, Vertex v) const;
  bool valid_vertex(Vertex v) const { return v >= 0 && v < n(); }

  // Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  // Neighbourhood bitmasks; requires n <= 64.
  std::vector<std::uint64_t> neighbor_masks() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  int edge_count_ = 0;
};

// A relabelled subgraph together with the original id of each new vertex.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_original;

  VertexSet lift(const VertexSet& local) const;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph remove_vertices(const Graph& g, const VertexSet& drop);

// G with the listed vertices isolated; ids are preserved.
Graph isolate_vertices(const Graph& g, const VertexSet& drop);

// Disjoint union; vertices of `b` are shifted by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

Graph with_added_vertices(const Graph& g, int extra, std::span<const Edge> new_edges);

VertexSet neighborhood(const Graph& g, const VertexSet& s);  // N(S), may intersect S
bool is_independent(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

// Deterministic 2-colouring: in every component the lowest vertex goes to
// the first part. Empty when the graph has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

// Components ordered by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);

// Text formats.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

}  // namespace oddbic
