#pragma once

// Data-parallel inner loops. Each kernel exists twice with identical
// signatures: `serial` is the reference implementation kept for testing, `omp`
// is the OpenMP version the library calls. Both return the same answer for
// every input and thread count (first-index / lexicographic tie rules).

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dibs/graph.hpp"
#include "dibs/triangles.hpp"

namespace dibs::kernels {

/// Outcome of the dense-pair scan for one pair {x1 < x2}.
struct PairHit {
  Vertex x1 = 0, x2 = 0;
  std::uint64_t y_size = 0;   // |Y|
  std::uint64_t y_edges = 0;  // e(G[Y])
};

/// Edge maximizing c(u,v) / (d(u) + d(v) - 2).
struct C4Best {
  Vertex u = 0, v = 0;
  std::uint64_t cycles = 0;       // c(u,v)
  std::uint64_t denominator = 0;  // d(u) + d(v) - 2
  bool all_zero = true;           // every edge has c = 0
};

/// Per-pair statistics the dense-pair search needs; `reverse[x]` lists the v
/// with x ∈ A_v. `scratch` has size n and is all zero on entry and exit.
PairHit pair_statistics(const Graph& g, const std::vector<VertexSet>& reverse, Vertex x1, Vertex x2,
                        std::vector<char>& scratch);

/// Whether 2n·e(Y) > d²·|Y| (exact).
bool pair_qualifies(const PairHit& hit, std::uint64_t n, std::uint64_t d);

/// e(N(u)∖{v}, N(v)∖{u}); uses `mark` (size n, all zero on entry and exit).
std::uint64_t c4_count(const Graph& g, Vertex u, Vertex v, std::vector<std::uint32_t>& mark);

namespace serial {

std::optional<Triangle> first_triangle(const Graph& g);
std::uint64_t count_triangles(const Graph& g);
std::optional<PairHit> first_good_pair(const Graph& g, const std::vector<VertexSet>& reverse,
                                       std::uint64_t d);
C4Best best_c4_edge(const Graph& g);
/// Lowest t in [0, budget) with accept(t) true.
std::optional<std::uint64_t> first_success(std::uint64_t budget,
                                           const std::function<bool(std::uint64_t)>& accept);
/// values[t] = f(t) for t in [0, trials).
std::vector<std::int64_t> map_trials(std::uint64_t trials,
                                     const std::function<std::int64_t(std::uint64_t)>& f);

}  // namespace serial

namespace omp {

std::optional<Triangle> first_triangle(const Graph& g);
std::uint64_t count_triangles(const Graph& g);
std::optional<PairHit> first_good_pair(const Graph& g, const std::vector<VertexSet>& reverse,
                                       std::uint64_t d);
C4Best best_c4_edge(const Graph& g);
std::optional<std::uint64_t> first_success(std::uint64_t budget,
                                           const std::function<bool(std::uint64_t)>& accept);
std::vector<std::int64_t> map_trials(std::uint64_t trials,
                                     const std::function<std::int64_t(std::uint64_t)>& f);

}  // namespace omp

/// True if (c1/den1, edge1) ranks ahead of (c2/den2, edge2): larger ratio, then
/// lexicographically smaller edge.
bool c4_better(const C4Best& a, const C4Best& b);

}  // namespace dibs::kernels
