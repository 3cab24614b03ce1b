#include "oddbic/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <deque>
#include <iterator>
#include <sstream>

#include "oddbic/error.hpp"

namespace oddbic {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::TruncatedPayload: return "TruncatedPayload";
    case ErrorCode::TrailingPayload: return "TrailingPayload";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::OracleLimitExceeded: return "OracleLimitExceeded";
    case ErrorCode::NoSmallTransversal: return "NoSmallTransversal";
    case ErrorCode::InvalidRecipeStep: return "InvalidRecipeStep";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::OutOfScopeClassification: return "OutOfScopeClassification";
    case ErrorCode::BudgetTooSmall: return "BudgetTooSmall";
    case ErrorCode::WrongFamily: return "WrongFamily";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(int n) {
  VertexSet s;
  s.members_.resize(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) s.members_[static_cast<std::size_t>(i)] = i;
  return s;
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet s;
  while (mask != 0) {
    s.members_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::uint64_t VertexSet::mask() const {
  std::uint64_t m = 0;
  for (Vertex v : members_) m |= std::uint64_t{1} << v;
  return m;
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  VertexSet out;
  std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out.members_));
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

bool VertexSet::disjoint_from(const VertexSet& other) const { return intersect(other).empty(); }

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n, std::span<const Edge> edges) : adjacency_(static_cast<std::size_t>(n)) {
  for (auto [u, v] : edges) {
    if (!valid_vertex(u) || !valid_vertex(v)) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " with n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    auto dup = std::adjacent_find(adj.begin(), adj.end());
    if (dup != adj.end()) {
      throw Error(ErrorCode::DuplicateEdge, std::to_string(v) + "-" + std::to_string(*dup));
    }
  }
  edge_count_ = static_cast<int>(edges.size());
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!valid_vertex(u) || !valid_vertex(v)) return false;
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::uint64_t> Graph::neighbor_masks() const {
  std::vector<std::uint64_t> masks(adjacency_.size(), 0);
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : neighbors(u)) masks[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  }
  return masks;
}

// ---------------------------------------------------------------- Subgraphs

VertexSet Subgraph::lift(const VertexSet& local) const {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_original[static_cast<std::size_t>(v)]);
  return VertexSet(std::move(out));
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.n()), -1);
  Subgraph sub;
  for (Vertex v : keep) {
    local[static_cast<std::size_t>(v)] = static_cast<Vertex>(sub.to_original.size());
    sub.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    Vertex lu = local[static_cast<std::size_t>(u)];
    Vertex lv = local[static_cast<std::size_t>(v)];
    if (lu >= 0 && lv >= 0) edges.emplace_back(lu, lv);
  }
  sub.graph = Graph(static_cast<int>(sub.to_original.size()), edges);
  return sub;
}

Subgraph remove_vertices(const Graph& g, const VertexSet& drop) {
  return induced_subgraph(g, VertexSet::range(g.n()).minus(drop));
}

Graph isolate_vertices(const Graph& g, const VertexSet& drop) {
  std::vector<Edge> edges;
  for (auto e : g.edges()) {
    if (!drop.contains(e.first) && !drop.contains(e.second)) edges.push_back(e);
  }
  return Graph(g.n(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), edges);
}

Graph with_added_vertices(const Graph& g, int extra, std::span<const Edge> new_edges) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), new_edges.begin(), new_edges.end());
  return Graph(g.n() + extra, edges);
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  std::vector<Vertex> out;
  for (Vertex v : s) {
    auto adj = g.neighbors(v);
    out.insert(out.end(), adj.begin(), adj.end());
  }
  return VertexSet(std::move(out));
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (s.contains(w)) return false;
    }
  }
  return true;
}

bool is_connected(const Graph& g) { return g.n() > 0 && connected_components(g).size() == 1; }

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
  std::vector<Vertex> first, second;
  for (Vertex root = 0; root < g.n(); ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      int cu = color[static_cast<std::size_t>(u)];
      (cu == 0 ? first : second).push_back(u);
      for (Vertex w : g.neighbors(u)) {
        int& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - cu;
          queue.push_back(w);
        } else if (cw == cu) {
          return std::nullopt;
        }
      }
    }
  }
  return std::make_pair(VertexSet(std::move(first)), VertexSet(std::move(second)));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<VertexSet> out;
  for (Vertex root = 0; root < g.n(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::vector<Vertex> members{root};
    seen[static_cast<std::size_t>(root)] = 1;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex w : g.neighbors(members[i])) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          members.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

// ---------------------------------------------------------------- Edge list

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> to_integer(std::string_view tok) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::pair<long long, long long>> header;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    auto toks = tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;

    auto a = toks.size() == 2 ? to_integer(toks[0]) : std::nullopt;
    auto b = toks.size() == 2 ? to_integer(toks[1]) : std::nullopt;
    if (!header) {
      if (!a || !b || *a < 0 || *b < 0) {
        throw Error(ErrorCode::MalformedHeader, "line " + std::to_string(line_no) + ": expected \"n m\"");
      }
      header = {*a, *b};
      continue;
    }
    if (!a || !b) {
      throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": expected \"u v\"");
    }
    if (*a < 0 || *a >= header->first || *b < 0 || *b >= header->first) {
      throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no));
    }
    edges.emplace_back(static_cast<Vertex>(*a), static_cast<Vertex>(*b));
  }
  if (!header) throw Error(ErrorCode::MalformedHeader, "missing \"n m\" header");
  if (static_cast<long long>(edges.size()) != header->second) {
    throw Error(ErrorCode::MalformedLine, "header announces " + std::to_string(header->second) +
                                              " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(header->first), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// ------------------------------------------------------------------- graph6

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

  for (std::size_t i = 0; i < line.size(); ++i) {
    auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw Error(ErrorCode::InvalidCharacter, "byte " + std::to_string(c) + " at offset " + std::to_string(i));
    }
  }
  if (line.empty()) throw Error(ErrorCode::TruncatedPayload, "empty graph6 string");

  auto six = [&](std::size_t i) { return static_cast<std::uint32_t>(line[i] - 63); };
  std::size_t at = 0;
  std::uint32_t n = 0;
  if (line[0] != 126) {
    n = six(0);
    at = 1;
  } else if (line.size() >= 4 && line[1] != 126) {
    n = (six(1) << 12) | (six(2) << 6) | six(3);
    at = 4;
  } else {
    // 36-bit form: far beyond anything this library handles.
    throw Error(ErrorCode::TruncatedPayload, "unsupported or truncated size prefix");
  }

  std::size_t bits = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t need = (bits + 5) / 6;
  if (line.size() - at < need) throw Error(ErrorCode::TruncatedPayload, "expected " + std::to_string(need) + " payload bytes");
  if (line.size() - at > need) throw Error(ErrorCode::TrailingPayload, "extra bytes after payload");

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::uint32_t byte = six(at + k / 6);
      if ((byte >> (5 - k % 6)) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  std::string out;
  auto n = static_cast<std::uint32_t>(g.n());
  if (n < 63) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(((n >> 12) & 63) + 63);
    out += static_cast<char>(((n >> 6) & 63) + 63);
    out += static_cast<char>((n & 63) + 63);
  }
  std::uint32_t acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.n(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
  return out;
}

}  // namespace oddbic
