#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace dibs {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free unless stated otherwise
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph in CSR form. Neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;

  Vertex n() const noexcept { return n_; }
  std::uint64_t m() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(Vertex v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(Vertex u, Vertex v) const;

  std::uint32_t min_degree() const;
  std::uint32_t max_degree() const;
  bool is_regular() const;

  /// All edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Position of v inside the CSR array of u; requires uv to be an edge.
  std::uint64_t edge_slot(Vertex u, Vertex v) const;
  std::span<const std::uint64_t> offsets() const { return offsets_; }

  friend Graph build_graph(Vertex n, std::span<const Edge> edges);
  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Vertex n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> offsets_{0};
  std::vector<Vertex> adj_;
};

/// Builds a graph from an edge list; duplicate pairs (in either orientation)
/// collapse. Throws InputError naming the index of the first out-of-range
/// endpoint or self-loop.
Graph build_graph(Vertex n, std::span<const Edge> edges);
inline Graph build_graph(Vertex n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// g[S] relabelled to 0..|S|-1 in the order of `vertices`, with the map back.
struct InducedSubgraph {
  Graph graph;
  VertexSet to_parent;

  VertexSet lift(std::span<const Vertex> local) const;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Number of edges of g with both ends in `vertices`.
std::uint64_t induced_edge_count(const Graph& g, std::span<const Vertex> vertices);

/// Number of edges between A and B (assumed disjoint).
std::uint64_t edges_between(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);

/// Boolean membership mask of size n.
std::vector<char> membership(Vertex n, std::span<const Vertex> vertices);

VertexSet all_vertices(Vertex n);

}  // namespace dibs
