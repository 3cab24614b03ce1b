#include "oddbic/graph_enumeration.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "oddbic/error.hpp"

namespace oddbic {

namespace {

std::vector<int> refine(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<int> color(n);
  for (Vertex v = 0; v < g.n(); ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::vector<int>> signature(n);
    for (Vertex v = 0; v < g.n(); ++v) {
      auto& sig = signature[static_cast<std::size_t>(v)];
      sig.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for (Vertex w : g.neighbors(v)) around.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& sig : signature) rank.emplace(sig, 0);
    int next = 0;
    for (auto& [sig, r] : rank) r = next++;
    for (std::size_t v = 0; v < n; ++v) color[v] = rank[signature[v]];
    if (rank.size() == classes) return color;
    classes = rank.size();
  }
}

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::vector<std::vector<Vertex>> cells) : g_(g), cells_(std::move(cells)) {}

  std::uint64_t run() {
    for (auto& cell : cells_) std::sort(cell.begin(), cell.end());
    visit(0);
    return best_;
  }

 private:
  void visit(std::size_t cell) {
    if (cell == cells_.size()) {
      std::vector<Vertex> order;
      for (const auto& c : cells_) order.insert(order.end(), c.begin(), c.end());
      std::uint64_t code = 0;
      int k = 0;
      for (std::size_t j = 1; j < order.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i, ++k) {
          if (g_.has_edge(order[i], order[j])) code |= std::uint64_t{1} << k;
        }
      }
      best_ = std::max(best_, code);
      return;
    }
    auto& members = cells_[cell];
    do {
      visit(cell + 1);
    } while (std::next_permutation(members.begin(), members.end()));
  }

  const Graph& g_;
  std::vector<std::vector<Vertex>> cells_;
  std::uint64_t best_ = 0;
};

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.n() > kMaxEnumerationOrder) {
    throw Error(ErrorCode::InvalidArgument, "canonical_code supports n <= " + std::to_string(kMaxEnumerationOrder));
  }
  auto color = refine(g);
  int classes = g.n() == 0 ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<Vertex>> cells(static_cast<std::size_t>(classes));
  for (Vertex v = 0; v < g.n(); ++v) cells[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])].push_back(v);
  return CanonicalSearch(g, std::move(cells)).run();
}

Graph graph_from_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if ((code >> k) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::vector<Graph> all_graphs(int n, bool connected_only) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::InvalidArgument, "all_graphs supports 0 <= n <= " + std::to_string(kMaxEnumerationOrder));
  }
  std::vector<std::uint64_t> level{0};  // the single graph on 0 vertices
  for (int order = 1; order <= n; ++order) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t code : level) {
      Graph base = graph_from_code(order - 1, code);
      auto base_edges = base.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (order - 1)); ++mask) {
        auto edges = base_edges;
        for (Vertex v = 0; v < order - 1; ++v) {
          if ((mask >> v) & 1u) edges.emplace_back(v, order - 1);
        }
        seen.insert(canonical_code(Graph(order, edges)));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<Graph> out;
  for (std::uint64_t code : level) {
    Graph g = graph_from_code(n, code);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace oddbic
