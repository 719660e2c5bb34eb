#pragma once

#include <cstdint>
#include <vector>

#include "dibs/degeneracy.hpp"
#include "dibs/graph.hpp"

namespace dibs {

struct Coloring {
  std::vector<std::uint32_t> color;  // per vertex
  std::uint32_t num_colors = 0;

  /// Vertices of each colour class, sorted.
  std::vector<VertexSet> classes() const;
};

/// Colours vertices right to left along `order`; each vertex takes the lowest
/// colour unused by its already-coloured right neighbours N⁺(v). Uses at most
/// degeneracy + 1 colours.
Coloring greedy_color(const Graph& g, const DegeneracyOrder& order);

/// Greedy minimum-degree independent set (pick a min-degree vertex, lowest id
/// on ties, delete its closed neighbourhood, repeat). Size >= n/(avg+1).
VertexSet turan_independent_set(const Graph& g);

/// turan_independent_set on g[within], in g's labels.
VertexSet turan_independent_set_within(const Graph& g, std::span<const Vertex> within);

bool is_independent(const Graph& g, std::span<const Vertex> s);
bool is_proper(const Graph& g, const Coloring& c);

}  // namespace dibs
