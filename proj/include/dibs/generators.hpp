#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dibs/graph.hpp"

namespace dibs {

// Small named graphs.
Graph empty_graph(Vertex n);
Graph path_graph(Vertex n);
Graph cycle_graph(Vertex n);  // n >= 3
Graph complete_graph(Vertex n);
Graph complete_bipartite(Vertex a, Vertex b);
Graph complete_multipartite(const std::vector<Vertex>& sizes);
Graph petersen_graph();

/// Looks up "c5", "c7", "k4", "k2", "petersen", "p3", ... Throws PreconditionError.
Graph named_graph(const std::string& name);

/// Vertex v becomes an independent set of sizes[v] vertices (consecutive ids,
/// blob of v before blob of v+1); each edge becomes a complete bipartite graph.
Graph blowup(const Graph& g, const std::vector<Vertex>& sizes);

/// Blob of each output vertex (inverse of the blowup layout).
std::vector<Vertex> blowup_owner(const std::vector<Vertex>& sizes);

/// `parts` sizes summing to n, each ⌊n/parts⌋ or ⌈n/parts⌉, larger ones first.
std::vector<Vertex> equal_part_sizes(Vertex n, Vertex parts);

/// G(n, p) by geometric skipping over pairs in lexicographic order.
Graph gnp(Vertex n, double p, std::uint64_t seed);

struct TriangleRemovalStats {
  std::uint64_t sampled_edges = 0;  // e(G(n, p))
  std::uint64_t family_size = 0;    // triangles in the greedy edge-disjoint family
};

/// G(n, c/√n) minus every edge of a maximal edge-disjoint triangle family
/// (greedy in lexicographic triangle order). Requires 0 < c < 1/20, n >= 100.
Graph gnp_triangle_removed(Vertex n, double c, std::uint64_t seed,
                           TriangleRemovalStats* stats = nullptr);

/// Edges of a maximal edge-disjoint triangle family, greedy over
/// list_triangles order.
std::vector<std::array<Vertex, 3>> greedy_triangle_family(const Graph& g);

/// gnp_triangle_removed, then every vertex of degree at most pn/30 is peeled
/// (core with t = ⌊pn/30⌋ + 1) and the survivors are relabelled 0.. in order.
/// Throws PreconditionError ("empty-peel") if nothing survives.
Graph sparse_regular_construction(Vertex n, double c, std::uint64_t seed);

/// Adds uniformly random non-edges one at a time, skipping any that closes a
/// triangle, until none can be added. One pass over a random pair order is
/// equivalent, since a pair that closes a triangle keeps doing so.
Graph triangle_free_process(Vertex n, std::uint64_t seed);

/// The triangle-free Cayley graph on GF(2)^{3k}: vertex x is a 3k-bit integer,
/// generators are u(a) + u(b) with u(w) = (w, w³, w⁵) over GF(2^k), a ∈ W0,
/// b ∈ W1, where W0 ∪ W1 splits GF(2^k)* with |W0| = 2^{k-1} - 1. Regular of
/// degree 2^{2k-2} - 2^{k-1}. 2 <= k <= 5.
Graph alon_graph(unsigned k);

/// The Cayley generator set of alon_graph(k), sorted.
std::vector<std::uint32_t> alon_generators(unsigned k);

/// 2^{2k-2} - 2^{k-1}
std::uint64_t alon_degree(unsigned k);

/// Parameters of a generated instance; written into graph file headers.
struct GeneratorParams {
  std::string model;  // blowup | gnp-tf | sparse-reg | process | alon
  Vertex n = 0;
  unsigned k = 0;
  double c = 0.0;
  std::string base;           // blowup base graph name
  std::vector<Vertex> sizes;  // blowup sizes; a single value applies to every vertex
  std::uint64_t seed = 0;
};

/// Builds the instance described by `params`. Throws PreconditionError on
/// missing or invalid parameters.
Graph generate(const GeneratorParams& params);

/// Provenance lines (without the leading '#').
std::vector<std::string> provenance_header(const GeneratorParams& params, const Graph& g);

}  // namespace dibs
