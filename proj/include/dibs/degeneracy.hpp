#pragma once

#include <cstdint>
#include <vector>

#include "dibs/graph.hpp"

namespace dibs {

/// Left-to-right vertex order from repeated minimum-degree removal (ties to the
/// lowest vertex id). N⁺(v) is the set of neighbours of v placed after v.
struct DegeneracyOrder {
  VertexSet order;                   // order[i] = i-th vertex from the left
  std::vector<std::uint32_t> position;  // inverse of order
  std::vector<std::uint32_t> right_degree;  // |N⁺(v)|, indexed by vertex
  std::uint32_t degeneracy = 0;

  bool is_right_of(Vertex v, Vertex w) const { return position[w] > position[v]; }

  /// N⁺(v), sorted by vertex id.
  VertexSet right_neighbors(const Graph& g, Vertex v) const;
};

DegeneracyOrder degeneracy_order(const Graph& g);

/// The t-core: unique maximal vertex set inducing minimum degree >= t.
VertexSet core(const Graph& g, std::uint32_t t);

/// Same, restricted to g[within].
VertexSet core_within(const Graph& g, std::span<const Vertex> within, std::uint32_t t);

/// Iteratively removes vertices with degree < avg/2, avg = 2m/n fixed at entry
/// and compared exactly (deg·n < m). Throws PreconditionError when m = 0.
VertexSet half_avg_subgraph(const Graph& g);

/// half_avg_subgraph applied to g[within]; result in g's labels.
VertexSet half_avg_subgraph_within(const Graph& g, std::span<const Vertex> within);

/// A vertex set S inducing minimum degree >= d such that removing any single
/// vertex of S and re-peeling at d empties it. Throws PreconditionError if the
/// d-core of g is empty.
VertexSet minimal_min_degree_subgraph(const Graph& g, std::uint32_t d);

/// Minimum degree of g[S] (0 for empty S).
std::uint32_t induced_min_degree(const Graph& g, std::span<const Vertex> s);

}  // namespace dibs
