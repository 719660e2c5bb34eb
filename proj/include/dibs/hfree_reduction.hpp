#pragma once

// K_t-free -> triangle-free recursion. On the minimal min-degree-d subgraph
// with its degeneracy order, either some G[N⁺(v)] is dense (more than d^{7/6}
// edges; recurse into it with clique bound t-1), or a random U (rate d^{-2/3})
// minus the leftmost vertex of each of its triangles leaves a triangle-free W
// with e(W) > d^{1/6}|W|, which is peeled and handed to the triangle-free
// extractor.

#include <cstdint>
#include <string>
#include <vector>

#include "dibs/certificate.hpp"
#include "dibs/degeneracy.hpp"
#include "dibs/graph.hpp"

namespace dibs {

struct ReductionOptions {
  std::uint64_t retry_budget = 2000;
  // The triangle-free extractor needs d >= 16, i.e. d >= 16^6 one level up.
  // With this set, a terminal stage below 16 runs the exhaustive dense-pair
  // extractor instead of failing.
  bool allow_dense_fallback = true;
  // Assert list_triangles(g, W) = ∅ for every sampled W, not only the accepted one.
  bool check_every_sample = false;
};

/// One level of the recursion, in the labels of the input graph.
struct ReductionStep {
  std::uint32_t t = 0;
  std::uint64_t d = 0;
  std::uint64_t n = 0;           // size of the minimal min-degree-d subgraph
  char branch = 0;               // 'b' dense neighbourhood, 'c' sampled W, 's' sparse, 'p' dense-pair
  Vertex v = 0;                  // branch b: the vertex whose N⁺ was dense
  std::uint64_t trials = 0;      // branch c: samples drawn (winning index + 1)
  VertexSet w;                   // branch c: accepted W
  std::uint64_t w_edges = 0;
  std::uint64_t samples_checked = 0;  // samples whose W was checked triangle-free
};

struct ReductionResult {
  BipartiteCert cert;
  std::vector<ReductionStep> path;
};

/// ⌈d^{1/6}⌉, exact.
std::uint64_t sixth_root_ceil(std::uint64_t d);

/// e⁶ > d⁷ (the neighbourhood has more than d^{7/6} edges).
bool exceeds_seven_sixths(std::uint64_t edges, std::uint64_t d);

/// e⁶ > d·w⁶ (more than d^{1/6}·w edges).
bool exceeds_sixth_root(std::uint64_t edges, std::uint64_t w, std::uint64_t d);

/// Statistics of one sample U on g (with g's degeneracy order).
struct USample {
  VertexSet u, w;
  std::uint64_t x1 = 0;  // e(G[U])
  std::uint64_t x2 = 0;  // triangles of G[U]
  std::uint64_t x3 = 0;  // edges of G[U] meeting a triangle's leftmost vertex outside that triangle
  std::uint64_t w_edges = 0;
};

/// U: each vertex independently with probability p (stateless coin keyed by
/// seed and vertex); W: U minus the leftmost vertex of every triangle of G[U].
USample sample_u(const Graph& g, const DegeneracyOrder& order, double p, std::uint64_t seed);

/// Recursion entry. Throws PreconditionError ("clique") if a K_t is found
/// (checked when t <= 5 and n <= 200), ("empty-core") if core(g, d) is empty,
/// ("degree-too-small") at a terminal stage below 16 without fallback, and
/// RetryExhausted when no sample is accepted.
ReductionResult reduce_extract_full(const Graph& g, std::uint32_t t, std::uint64_t d,
                                    std::uint64_t seed, const ReductionOptions& options = {});

BipartiteCert reduce_extract(const Graph& g, std::uint32_t t, std::uint64_t d, std::uint64_t seed,
                             const ReductionOptions& options = {});

}  // namespace dibs
