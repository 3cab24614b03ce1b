#include "oddbic/family.hpp"

#include <algorithm>

#include "oddbic/bicritical.hpp"
#include "oddbic/error.hpp"

namespace oddbic {

namespace {

class CycleWalker {
 public:
  CycleWalker(const Graph& g, std::size_t cap, std::optional<int> odd_stop)
      : g_(g), cap_(cap), odd_stop_(odd_stop), on_path_(static_cast<std::size_t>(g.n()), 0) {}

  CycleList run() {
    for (Vertex s = 0; s < g_.n() && !out_.truncated; ++s) {
      start_ = s;
      path_.assign(1, s);
      on_path_[static_cast<std::size_t>(s)] = 1;
      extend(s);
      on_path_[static_cast<std::size_t>(s)] = 0;
    }
    std::sort(out_.cycles.begin(), out_.cycles.end());
    return std::move(out_);
  }

 private:
  void extend(Vertex v) {
    for (Vertex w : g_.neighbors(v)) {
      if (out_.truncated) return;
      if (w == start_) {
        if (path_.size() >= 3 && path_[1] < path_.back()) record();
        continue;
      }
      if (w < start_ || on_path_[static_cast<std::size_t>(w)]) continue;
      on_path_[static_cast<std::size_t>(w)] = 1;
      path_.push_back(w);
      extend(w);
      path_.pop_back();
      on_path_[static_cast<std::size_t>(w)] = 0;
    }
  }

  void record() {
    if (out_.cycles.size() >= cap_) {
      out_.truncated = true;
      return;
    }
    out_.cycles.push_back(path_);
    if (path_.size() % 2 == 1) ++out_.odd_count;
    if (odd_stop_ && out_.odd_count > *odd_stop_) out_.truncated = true;
  }

  const Graph& g_;
  std::size_t cap_;
  std::optional<int> odd_stop_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  CycleList out_;
};

FamilyClassification out_of_scope(std::string reason) {
  FamilyClassification c;
  c.tag = FamilyTag::OutOfScope;
  c.reason = std::move(reason);
  return c;
}

[[noreturn]] void violation(const std::string& what) { throw Error(ErrorCode::StructureViolation, what); }

VertexSet as_set(const Cycle& c) { return VertexSet(std::vector<Vertex>(c.begin(), c.end())); }

// The graph restricted to `members` is exactly the cycle `c`.
bool component_is_cycle(const Graph& g, const VertexSet& members, const Cycle& c) {
  if (as_set(c) != members) return false;
  for (Vertex v : members) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

Vertex attachment_of(const Graph& g, const Cycle& c) {
  std::vector<Vertex> heavy;
  for (Vertex v : c) {
    if (g.degree(v) >= 3) heavy.push_back(v);
  }
  if (heavy.size() != 1) {
    violation("odd cycle " + as_set(c).to_string() + " has " + std::to_string(heavy.size()) +
              " vertices of degree >= 3, expected exactly one");
  }
  return heavy.front();
}

void classify_linked(const Graph& g, FamilyClassification& cls) {
  cls.x = attachment_of(g, cls.C);
  cls.y = attachment_of(g, *cls.C_prime);
  std::vector<Vertex> light;
  for (Vertex v : cls.cycle_vertices()) {
    if (g.degree(v) == 2) light.push_back(v);
  }
  cls.X = VertexSet(std::move(light));

  auto rest = remove_vertices(g, cls.X);
  if (!is_connected(rest.graph)) violation("G - X is disconnected");
  auto parts = bipartition(rest.graph);
  if (!parts) violation("G - X is not bipartite");
  VertexSet first = rest.lift(parts->first);
  VertexSet second = rest.lift(parts->second);
  if (!first.contains(*cls.x)) std::swap(first, second);
  cls.A = first;
  cls.B = second;

  if (cls.A.contains(*cls.y)) {
    cls.tag = FamilyTag::EvenLinked;
    if (cls.A.size() != cls.B.size() + 1) violation("even-linked graph with |A| != |B| + 1");
  } else {
    cls.tag = FamilyTag::OddLinked;
    if (cls.A.size() != cls.B.size()) violation("odd-linked graph with |A| != |B|");
  }
}

}  // namespace

CycleList enumerate_cycles(const Graph& g, std::size_t cap, std::optional<int> odd_stop) {
  return CycleWalker(g, std::max<std::size_t>(cap, 1), odd_stop).run();
}

std::string_view family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::OneOddCycle: return "OneOddCycle";
    case FamilyTag::FusedOdd: return "FusedOdd";
    case FamilyTag::EvenLinked: return "EvenLinked";
    case FamilyTag::OddLinked: return "OddLinked";
    case FamilyTag::DisconnectedPair: return "DisconnectedPair";
    case FamilyTag::OutOfScope: return "OutOfScope";
  }
  return "OutOfScope";
}

std::optional<FamilyTag> parse_family(std::string_view name) {
  for (FamilyTag tag : {FamilyTag::OneOddCycle, FamilyTag::FusedOdd, FamilyTag::EvenLinked, FamilyTag::OddLinked,
                        FamilyTag::DisconnectedPair, FamilyTag::OutOfScope}) {
    if (family_name(tag) == name) return tag;
  }
  return std::nullopt;
}

const std::vector<FamilyTag>& in_scope_families() {
  static const std::vector<FamilyTag> kFamilies{FamilyTag::OneOddCycle, FamilyTag::FusedOdd, FamilyTag::EvenLinked,
                                                FamilyTag::OddLinked, FamilyTag::DisconnectedPair};
  return kFamilies;
}

VertexSet FamilyClassification::cycle_vertices() const {
  VertexSet out = as_set(C);
  if (C_prime) out = out.unite(as_set(*C_prime));
  return out;
}

FamilyClassification classify(const Graph& g, bool assume_bicritical, std::size_t cycle_cap) {
  if (!assume_bicritical && !is_2bicritical(g).is_bicritical) return out_of_scope("not 2-bicritical");

  CycleList cycles = enumerate_cycles(g, cycle_cap, 2);
  if (cycles.truncated) {
    if (cycles.odd_count > 2) return out_of_scope("more than two odd cycles");
    return out_of_scope("cycle enumeration cap reached");
  }
  std::vector<Cycle> odd;
  for (const auto& c : cycles.cycles) {
    if (c.size() % 2 == 1) odd.push_back(c);
  }
  if (odd.empty()) return out_of_scope("no odd cycle");

  FamilyClassification cls;
  cls.C = odd[0];
  if (odd.size() == 1) {
    if (g.n() != static_cast<int>(cls.C.size()) || g.m() != static_cast<int>(cls.C.size())) {
      return out_of_scope("unique odd cycle does not span the graph");
    }
    cls.tag = FamilyTag::OneOddCycle;
    return cls;
  }

  cls.C_prime = odd[1];
  auto components = connected_components(g);
  if (components.size() == 2) {
    bool pair = (component_is_cycle(g, components[0], cls.C) && component_is_cycle(g, components[1], *cls.C_prime)) ||
                (component_is_cycle(g, components[0], *cls.C_prime) && component_is_cycle(g, components[1], cls.C));
    if (!pair) violation("two components that are not both odd cycles");
    cls.tag = FamilyTag::DisconnectedPair;
    return cls;
  }
  if (components.size() > 2) violation("more than two components");

  cls.shared = as_set(cls.C).intersect(as_set(*cls.C_prime));
  if (!cls.shared.empty()) {
    cls.tag = FamilyTag::FusedOdd;
    if (cls.shared.size() == 1) cls.x = cls.shared[0];
    return cls;
  }
  classify_linked(g, cls);
  return cls;
}

}  // namespace oddbic
