#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cohomlen/exponent_vector.hpp"
#include "cohomlen/monomial_ideal.hpp"

namespace cohomlen {

/// Finite simple graph whose vertices are a subset of the variable indices
/// {0, ..., d-1}. Vertex indices are variable indices; there is no relabeling.
class Graph {
public:
  using Edge = std::pair<std::size_t, std::size_t>;

  Graph() = default;
  /// Graph on all of {0..d-1}. Throws on loops, repeated edges or bad indices.
  Graph(std::size_t universe, std::vector<Edge> edges);
  Graph(std::size_t universe, VarMask vertices, std::vector<Edge> edges);

  std::size_t universe() const { return universe_; }
  VarMask vertices() const { return vertices_; }
  std::size_t order() const { return vertices_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  VarMask neighbors(std::size_t v) const;
  /// st(S) = S together with every vertex adjacent to S.
  VarMask star(VarMask s) const;
  VarMask isolated_vertices() const;

  /// Induced subgraph on the vertices not in `removed`.
  Graph without(VarMask removed) const;

  std::vector<VarMask> components() const;
  /// Two-coloring of a connected component, or nullopt when it holds an odd cycle.
  std::optional<std::pair<VarMask, VarMask>> bipartition(VarMask component) const;
  /// Vertices of an odd cycle inside `component`, empty if the component is bipartite.
  std::vector<std::size_t> odd_cycle(VarMask component) const;
  bool is_bipartite() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::size_t universe_ = 0;
  VarMask vertices_;
  std::vector<Edge> edges_;
};

MonomialIdeal edge_ideal(const Graph& g);

/// G_x: delete st(v), then drop the isolated vertices left behind.
Graph g_sub_x(const Graph& g, std::size_t v);

enum class VertexWitness {
  isolated_vertices,    // G minus st(v) has isolated vertices
  bipartite_component,  // G_v has a bipartite connected component
  fails,
};

struct FinitenessCriterion {
  bool finite = false;
  std::vector<VertexWitness> witnesses;  // one per vertex, in index order
};

/// Decides whether lambda(H^1_m(R/I(G)^n)) is finite for n >> 0.
/// Requires d >= 3 and no isolated vertices; throws DomainError otherwise.
FinitenessCriterion star_deletion_criterion(const Graph& g);

/// True iff every G_v is bipartite.
bool locally_bipartite(const Graph& g);

/// Height of the edge ideal, the minimum vertex cover size (exhaustive, d <= 16).
std::size_t height_edge_ideal(const Graph& g);

}  // namespace cohomlen
