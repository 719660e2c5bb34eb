#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "dibs/graph.hpp"

namespace dibs {

using Triangle = std::array<Vertex, 3>;  // sorted ascending

/// Every triangle of g (or of g[*restrict]) exactly once, vertices sorted,
/// list in lexicographic order. Edge-iterator with sorted-list intersection.
std::vector<Triangle> list_triangles(const Graph& g,
                                     const std::optional<VertexSet>& restrict = std::nullopt);

/// Lexicographically first triangle, if any.
std::optional<Triangle> find_triangle(const Graph& g);

/// Throws TriangleFound with the first triangle as witness.
void require_triangle_free(const Graph& g);

/// Finds a clique on t vertices (t >= 1) by ordered candidate-set search, or
/// nothing. Exponential in t; intended for small t.
std::optional<VertexSet> find_clique(const Graph& g, std::uint32_t t);

}  // namespace dibs
