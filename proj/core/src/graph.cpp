#include "cohomlen/graph.hpp"

#include <algorithm>
#include <bit>

#include "cohomlen/errors.hpp"

namespace cohomlen {

namespace {

Graph::Edge normalized(Graph::Edge e) { return e.first < e.second ? e : Graph::Edge{e.second, e.first}; }

void require_criterion_preconditions(const Graph& g) {
  if (g.universe() < 3) throw DomainError("edge-ideal criteria need at least 3 variables");
  if (g.vertices() != VarMask::full(g.universe()))
    throw DomainError("edge-ideal criteria need the vertex set to be all variables");
  if (!g.isolated_vertices().empty()) throw DomainError("edge-ideal criteria need a graph without isolated vertices");
}

}  // namespace

Graph::Graph(std::size_t universe, std::vector<Edge> edges)
    : Graph(universe, VarMask::full(universe), std::move(edges)) {}

Graph::Graph(std::size_t universe, VarMask vertices, std::vector<Edge> edges)
    : universe_(universe), vertices_(vertices) {
  if (universe > 32) throw ResourceError("graphs are limited to 32 vertices");
  if (!vertices.subset_of(VarMask::full(universe))) throw RangeError("vertex outside the universe");
  for (auto e : edges) {
    e = normalized(e);
    if (e.first == e.second) throw DomainError("loop at vertex " + std::to_string(e.first + 1));
    if (!vertices.contains(e.first) || !vertices.contains(e.second) || e.second >= universe)
      throw RangeError("edge endpoint outside the vertex set");
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) throw DomainError("repeated edge");
}

VarMask Graph::neighbors(std::size_t v) const {
  VarMask out;
  for (auto [a, b] : edges_) {
    if (a == v) out = out.with(b);
    if (b == v) out = out.with(a);
  }
  return out;
}

VarMask Graph::star(VarMask s) const {
  VarMask out = s;
  for (auto v : s.indices()) out = out | neighbors(v);
  return out & vertices_;
}

VarMask Graph::isolated_vertices() const {
  VarMask touched;
  for (auto [a, b] : edges_) touched = touched.with(a).with(b);
  return vertices_.without(touched);
}

Graph Graph::without(VarMask removed) const {
  std::vector<Edge> kept;
  for (auto e : edges_)
    if (!removed.contains(e.first) && !removed.contains(e.second)) kept.push_back(e);
  return Graph(universe_, vertices_.without(removed), std::move(kept));
}

std::vector<VarMask> Graph::components() const {
  std::vector<VarMask> out;
  VarMask seen;
  for (auto v : vertices_.indices()) {
    if (seen.contains(v)) continue;
    VarMask comp = VarMask::of({v});
    for (VarMask prev; prev != comp;) {
      prev = comp;
      comp = star(comp);
    }
    seen = seen | comp;
    out.push_back(comp);
  }
  return out;
}

std::optional<std::pair<VarMask, VarMask>> Graph::bipartition(VarMask component) const {
  if (component.empty()) return std::pair<VarMask, VarMask>{};
  std::vector<int> color(universe_, -1);
  std::vector<std::size_t> queue{component.indices().front()};
  color[queue.front()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto u = queue[head];
    for (auto w : neighbors(u).indices()) {
      if (color[w] < 0) {
        color[w] = 1 - color[u];
        queue.push_back(w);
      } else if (color[w] == color[u]) {
        return std::nullopt;
      }
    }
  }
  VarMask side0, side1;
  for (auto v : component.indices()) {
    if (color[v] == 0)
      side0 = side0.with(v);
    else
      side1 = side1.with(v);
  }
  return std::pair{side0, side1};
}

std::vector<std::size_t> Graph::odd_cycle(VarMask component) const {
  if (component.empty()) return {};
  // BFS tree; a non-tree edge between equal depths closes an odd cycle.
  std::vector<int> depth(universe_, -1);
  std::vector<std::size_t> parent(universe_, universe_);
  auto root = component.indices().front();
  std::vector<std::size_t> queue{root};
  depth[root] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto u = queue[head];
    for (auto w : neighbors(u).indices()) {
      if (depth[w] < 0) {
        depth[w] = depth[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      } else if (depth[w] == depth[u]) {
        std::vector<std::size_t> left{u}, right{w};
        while (left.back() != right.back()) {
          left.push_back(parent[left.back()]);
          right.push_back(parent[right.back()]);
        }
        right.pop_back();
        left.insert(left.end(), right.rbegin(), right.rend());
        return left;
      }
    }
  }
  return {};
}

bool Graph::is_bipartite() const {
  auto comps = components();
  return std::all_of(comps.begin(), comps.end(), [&](VarMask c) { return bipartition(c).has_value(); });
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<ExponentVector> gens;
  for (auto [a, b] : g.edges()) {
    ExponentVector e(g.universe());
    e[a] = 1;
    e[b] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal::minimalize(g.universe(), std::move(gens));
}

Graph g_sub_x(const Graph& g, std::size_t v) {
  if (v >= g.universe() || !g.vertices().contains(v)) throw RangeError("vertex " + std::to_string(v + 1) + " not in graph");
  auto rest = g.without(g.star(VarMask::of({v})));
  return rest.without(rest.isolated_vertices());
}

FinitenessCriterion star_deletion_criterion(const Graph& g) {
  require_criterion_preconditions(g);
  FinitenessCriterion result{true, {}};
  for (std::size_t v = 0; v < g.universe(); ++v) {
    auto rest = g.without(g.star(VarMask::of({v})));
    VertexWitness w = VertexWitness::fails;
    if (!rest.isolated_vertices().empty()) {
      w = VertexWitness::isolated_vertices;
    } else {
      auto gx = g_sub_x(g, v);
      auto comps = gx.components();
      if (std::any_of(comps.begin(), comps.end(), [&](VarMask c) { return gx.bipartition(c).has_value(); }))
        w = VertexWitness::bipartite_component;
    }
    result.witnesses.push_back(w);
    if (w == VertexWitness::fails) result.finite = false;
  }
  return result;
}

bool locally_bipartite(const Graph& g) {
  require_criterion_preconditions(g);
  for (std::size_t v = 0; v < g.universe(); ++v)
    if (!g_sub_x(g, v).is_bipartite()) return false;
  return true;
}

std::size_t height_edge_ideal(const Graph& g) {
  if (g.universe() > 16) throw ResourceError("vertex cover search limited to 16 vertices");
  std::size_t best = g.order();
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << g.universe()); ++s) {
    VarMask cover(s);
    if (!cover.subset_of(g.vertices()) || cover.size() >= best) continue;
    bool covers = std::all_of(g.edges().begin(), g.edges().end(),
                              [&](const Graph::Edge& e) { return cover.contains(e.first) || cover.contains(e.second); });
    if (covers) best = cover.size();
  }
  return best;
}

}  // namespace cohomlen
