#pragma once

#include <cstdint>
#include <vector>

#include "dibs/certificate.hpp"
#include "dibs/graph.hpp"

namespace dibs {

/// A_v = the d smallest neighbours of v. Throws PreconditionError naming the
/// first vertex with degree < d.
std::vector<VertexSet> fix_A(const Graph& g, std::uint64_t d);

enum class PairMode { Exhaustive, Sampled };

/// Random-pair neighbourhood method. For a pair {x1, x2} let
/// Y = {v : A_v ∩ {x1, x2} ≠ ∅}; find one with e(Y) > (d²/2n)|Y| (all pairs in
/// lexicographic order, or uniform random pairs with budget `sampled_budget`,
/// default 10n), split Y into N(x1) ∩ Y and (N(x2) ∖ N(x1)) ∩ Y, and peel to
/// half the average degree. Guarantee ⌈d²/(2n)⌉.
BipartiteCert extract_dense_pair(const Graph& g, std::uint64_t d, PairMode mode = PairMode::Exhaustive,
                                 std::uint64_t seed = 0, std::uint64_t sampled_budget = 0);

/// ⌈d² / (2n)⌉
std::uint64_t dense_pair_guarantee(std::uint64_t n, std::uint64_t d);

/// Number of 4-cycles through edge uv in a triangle-free graph, i.e.
/// e(N(u) ∖ {v}, N(v) ∖ {u}). Throws PreconditionError if uv is not an edge.
std::uint64_t c4_through_edge(const Graph& g, Vertex u, Vertex v);

/// 4-cycle / edge-ratio method: take the edge maximizing
/// q = c(u,v) / (d(u) + d(v) - 2) and peel the bipartite graph between
/// N(u) ∖ {v} and N(v) ∖ {u}. Guarantee ⌈q⌉. The trace stores q as
/// q_num / q_den; when min degree d > 2√n it also checks q >= d²/(4n). If every
/// c(u,v) is zero the result is a single edge with note `degenerate`.
BipartiteCert extract_dense_c4(const Graph& g);

}  // namespace dibs
