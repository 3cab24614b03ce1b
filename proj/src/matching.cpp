#include "oddbic/matching.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "oddbic/error.hpp"

namespace oddbic {

void Matching::add(Vertex u, Vertex v) {
  if (covers(u) || covers(v)) throw std::logic_error("Matching::add on a covered vertex");
  mate_[static_cast<std::size_t>(u)] = v;
  mate_[static_cast<std::size_t>(v)] = u;
  ++size_;
}

void Matching::remove(Vertex u) {
  if (!covers(u)) return;
  Vertex v = mate_[static_cast<std::size_t>(u)];
  mate_[static_cast<std::size_t>(u)] = -1;
  mate_[static_cast<std::size_t>(v)] = -1;
  --size_;
}

std::vector<Edge> Matching::pairs() const {
  std::vector<Edge> out;
  for (Vertex v = 0; v < n(); ++v) {
    if (covers(v) && v < mate_[static_cast<std::size_t>(v)]) out.emplace_back(v, mate_[static_cast<std::size_t>(v)]);
  }
  return out;
}

bool is_matching_of(const Graph& g, const Matching& m) {
  if (m.n() != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!m.covers(v)) continue;
    Vertex w = m.partner(v);
    if (m.partner(w) != v || !g.has_edge(v, w)) return false;
  }
  return true;
}

namespace {

// Blossom search state for one exposed root. `base` maps every vertex to
// the base of the outermost blossom containing it.
class BlossomSearch {
 public:
  explicit BlossomSearch(const Graph& g)
      : g_(g), n_(static_cast<std::size_t>(g.n())), mate_(n_, -1), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

  Matching run() {
    for (Vertex root = 0; root < g_.n(); ++root) {
      if (mate_[idx(root)] != -1) continue;
      Vertex end = find_augmenting_path(root);
      while (end != -1) {
        Vertex pv = parent_[idx(end)];
        Vertex next = mate_[idx(pv)];
        mate_[idx(end)] = pv;
        mate_[idx(pv)] = end;
        end = next;
      }
    }
    Matching m(g_.n());
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (mate_[idx(v)] > v) m.add(v, mate_[idx(v)]);
    }
    return m;
  }

 private:
  static std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lca(Vertex a, Vertex b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[idx(a)];
      seen[idx(a)] = 1;
      if (mate_[idx(a)] == -1) break;
      a = parent_[idx(mate_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(mate_[idx(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[idx(v)] != b) {
      blossom_[idx(base_[idx(v)])] = 1;
      blossom_[idx(base_[idx(mate_[idx(v)])])] = 1;
      parent_[idx(v)] = child;
      child = mate_[idx(v)];
      v = parent_[idx(mate_[idx(v)])];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<Vertex>(i);
    used_[idx(root)] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
        if (to == root || (mate_[idx(to)] != -1 && parent_[idx(mate_[idx(to)])] != -1)) {
          Vertex cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (blossom_[idx(base_[i])]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push_back(static_cast<Vertex>(i));
              }
            }
          }
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (mate_[idx(to)] == -1) return to;
          used_[idx(mate_[idx(to)])] = 1;
          queue.push_back(mate_[idx(to)]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

bool try_kuhn(const Graph& g, Vertex u, const std::vector<char>& right, std::vector<char>& visited,
              std::vector<Vertex>& mate) {
  for (Vertex w : g.neighbors(u)) {
    if (!right[static_cast<std::size_t>(w)] || visited[static_cast<std::size_t>(w)]) continue;
    visited[static_cast<std::size_t>(w)] = 1;
    Vertex holder = mate[static_cast<std::size_t>(w)];
    if (holder == -1 || try_kuhn(g, holder, right, visited, mate)) {
      mate[static_cast<std::size_t>(w)] = u;
      return true;
    }
  }
  return false;
}

// Kuhn's algorithm from `left` into `right`. Returns the right-side mate array.
std::vector<Vertex> kuhn(const Graph& g, const VertexSet& left, const std::vector<char>& right) {
  std::vector<Vertex> mate(static_cast<std::size_t>(g.n()), -1);
  std::vector<char> visited(static_cast<std::size_t>(g.n()));
  for (Vertex u : left) {
    std::fill(visited.begin(), visited.end(), 0);
    try_kuhn(g, u, right, visited, mate);
  }
  return mate;
}

int mu_without(const Graph& g, const VertexSet& drop) { return matching_number(isolate_vertices(g, drop)); }

void assert_structure(const Graph& g, const GallaiEdmonds& ge) {
  auto d_sub = induced_subgraph(g, ge.D);
  std::vector<int> component_of(static_cast<std::size_t>(g.n()), -1);
  int index = 0;
  for (const auto& comp : connected_components(d_sub.graph)) {
    auto lifted = d_sub.lift(comp);
    if (!is_factor_critical(induced_subgraph(g, lifted).graph)) {
      throw std::logic_error("Gallai-Edmonds: component " + lifted.to_string() + " of G[D] is not factor-critical");
    }
    for (Vertex v : lifted) component_of[static_cast<std::size_t>(v)] = index;
    ++index;
  }
  Matching m = maximum_matching(g);
  for (Vertex c : ge.C) {
    if (!m.covers(c)) throw std::logic_error("Gallai-Edmonds: maximum matching misses C vertex");
  }
  std::vector<char> used(static_cast<std::size_t>(index), 0);
  for (Vertex a : ge.A) {
    Vertex d = m.partner(a);
    int comp = d == a ? -1 : component_of[static_cast<std::size_t>(d)];
    if (comp < 0 || used[static_cast<std::size_t>(comp)]) {
      throw std::logic_error("Gallai-Edmonds: A is not matched into distinct D components");
    }
    used[static_cast<std::size_t>(comp)] = 1;
  }
}

}  // namespace

Matching maximum_matching(const Graph& g) { return BlossomSearch(g).run(); }

int matching_number(const Graph& g) { return maximum_matching(g).size(); }

Matching bipartite_maximum_matching(const Graph& g, const VertexSet& left) {
  std::vector<char> right(static_cast<std::size_t>(g.n()), 1);
  for (Vertex v : left) right[static_cast<std::size_t>(v)] = 0;
  auto mate = kuhn(g, left, right);
  Matching m(g.n());
  for (Vertex w = 0; w < g.n(); ++w) {
    if (mate[static_cast<std::size_t>(w)] != -1) m.add(mate[static_cast<std::size_t>(w)], w);
  }
  return m;
}

GallaiEdmonds gallai_edmonds(const Graph& g) {
  int mu = matching_number(g);
  std::vector<Vertex> d;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (mu_without(g, {v}) == mu) d.push_back(v);
  }
  GallaiEdmonds ge;
  ge.D = VertexSet(std::move(d));
  ge.A = neighborhood(g, ge.D).minus(ge.D);
  ge.C = VertexSet::range(g.n()).minus(ge.D).minus(ge.A);
  assert_structure(g, ge);
  return ge;
}

bool is_factor_critical(const Graph& g) {
  if (g.n() % 2 == 0) return false;
  const int target = (g.n() - 1) / 2;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (mu_without(g, {v}) != target) return false;
  }
  return true;
}

bool is_matching_covered(const Graph& g) {
  if (g.n() % 2 != 0 || !is_connected(g)) return false;
  const int half = g.n() / 2;
  if (matching_number(g) != half) return false;
  for (auto [u, v] : g.edges()) {
    if (mu_without(g, {u, v}) != half - 1) return false;
  }
  return true;
}

std::optional<Matching> can_match_into(const Graph& g, const VertexSet& T, const VertexSet& S) {
  if (!T.disjoint_from(S)) {
    throw Error(ErrorCode::OverlappingSets, "T=" + T.to_string() + " S=" + S.to_string());
  }
  if (T.size() > S.size()) return std::nullopt;
  std::vector<char> right(static_cast<std::size_t>(g.n()), 0);
  for (Vertex s : S) right[static_cast<std::size_t>(s)] = 1;
  auto mate = kuhn(g, T, right);
  Matching m(g.n());
  for (Vertex s : S) {
    if (mate[static_cast<std::size_t>(s)] != -1) m.add(mate[static_cast<std::size_t>(s)], s);
  }
  if (m.size() != static_cast<int>(T.size())) return std::nullopt;
  return m;
}

}  // namespace oddbic
