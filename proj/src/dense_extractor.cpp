#include "dibs/dense_extractor.hpp"

#include <algorithm>
#include <stdexcept>

#include "dibs/degeneracy.hpp"
#include "dibs/errors.hpp"
#include "dibs/kernels.hpp"
#include "dibs/rng.hpp"
#include "dibs/triangles.hpp"

namespace dibs {

std::vector<VertexSet> fix_A(const Graph& g, std::uint64_t d) {
  std::vector<VertexSet> a(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() < d)
      throw PreconditionError("degree-too-small",
                              "vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(nb.size()) + " < d = " + std::to_string(d),
                              {v});
    a[v].assign(nb.begin(), nb.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return a;
}

std::uint64_t dense_pair_guarantee(std::uint64_t n, std::uint64_t d) {
  if (n == 0) return 0;
  using U = unsigned __int128;
  const U num = U{d} * d;
  const U den = U{2} * n;
  return static_cast<std::uint64_t>((num + den - 1) / den);
}

BipartiteCert extract_dense_pair(const Graph& g, std::uint64_t d, PairMode mode, std::uint64_t seed,
                                 std::uint64_t sampled_budget) {
  if (d == 0) throw PreconditionError("degree-too-small", "dense-pair needs d >= 1");
  require_triangle_free(g);
  const auto a = fix_A(g, d);
  std::vector<VertexSet> reverse(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex x : a[v]) reverse[x].push_back(v);

  std::optional<kernels::PairHit> hit;
  std::uint64_t tried = 0;
  if (mode == PairMode::Exhaustive) {
    hit = kernels::omp::first_good_pair(g, reverse, d);
    if (!hit)
      throw std::logic_error("no qualifying pair although the graph is triangle-free with min degree >= d");
  } else {
    const std::uint64_t budget = sampled_budget ? sampled_budget : 10 * std::uint64_t{g.n()};
    SplitMix64 rng(seed);
    std::vector<char> scratch(g.n(), 0);
    for (; tried < budget && !hit; ++tried) {
      Vertex x1 = static_cast<Vertex>(rng.below(g.n()));
      Vertex x2 = static_cast<Vertex>(rng.below(g.n() - 1));
      if (x2 >= x1) ++x2;
      if (x1 > x2) std::swap(x1, x2);
      auto cand = kernels::pair_statistics(g, reverse, x1, x2, scratch);
      if (kernels::pair_qualifies(cand, g.n(), d)) hit = cand;
    }
    if (!hit)
      throw RetryExhausted("no qualifying pair in " + std::to_string(budget) +
                               " random pairs; use exhaustive mode",
                           budget, 0.0);
  }

  VertexSet y;
  std::set_union(reverse[hit->x1].begin(), reverse[hit->x1].end(), reverse[hit->x2].begin(),
                 reverse[hit->x2].end(), std::back_inserter(y));
  const VertexSet kept = half_avg_subgraph_within(g, y);
  auto n1 = g.neighbors(hit->x1);
  VertexSet side_a, side_b;
  for (Vertex v : kept) {
    if (std::binary_search(n1.begin(), n1.end(), v)) side_a.push_back(v);
    else side_b.push_back(v);
  }

  BipartiteCert cert = make_certificate(g, "dense-pair", std::move(side_a), std::move(side_b));
  cert.guarantee = dense_pair_guarantee(g.n(), d);
  cert.trace.seed = seed;
  cert.trace.retries = mode == PairMode::Sampled ? tried - 1 : 0;
  cert.trace.retry_budget = mode == PairMode::Sampled ? (sampled_budget ? sampled_budget : 10 * std::uint64_t{g.n()}) : 0;
  cert.trace.set("d", static_cast<std::int64_t>(d));
  cert.trace.set("x1", hit->x1);
  cert.trace.set("x2", hit->x2);
  cert.trace.set("Y", static_cast<std::int64_t>(hit->y_size));
  cert.trace.set("eY", static_cast<std::int64_t>(hit->y_edges));
  cert.trace.set("kept", static_cast<std::int64_t>(kept.size()));
  cert.trace.note(mode == PairMode::Exhaustive ? "mode=exhaustive" : "mode=sampled");
  if (cert.claimed_min_degree < cert.guarantee)
    throw std::logic_error("dense-pair certificate below its guarantee");
  return cert;
}

std::uint64_t c4_through_edge(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.n() || v >= g.n() || !g.has_edge(u, v))
    throw PreconditionError("not-an-edge",
                            std::to_string(u) + "-" + std::to_string(v) + " is not an edge", {u, v});
  std::vector<std::uint32_t> mark(g.n(), 0);
  return kernels::c4_count(g, u, v, mark);
}

BipartiteCert extract_dense_c4(const Graph& g) {
  if (g.m() == 0) throw PreconditionError("empty-graph", "dense-c4 needs at least one edge");
  require_triangle_free(g);
  const kernels::C4Best best = kernels::omp::best_c4_edge(g);

  BipartiteCert cert;
  if (best.all_zero) {
    cert = make_certificate(g, "dense-c4", {best.u}, {best.v});
    cert.guarantee = 1;
    cert.trace.note("degenerate");
  } else {
    VertexSet a, b;
    for (Vertex w : g.neighbors(best.u))
      if (w != best.v) a.push_back(w);
    for (Vertex w : g.neighbors(best.v))
      if (w != best.u) b.push_back(w);
    VertexSet both;
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    const VertexSet kept = half_avg_subgraph_within(g, both);
    VertexSet side_a, side_b;
    for (Vertex w : kept) (std::binary_search(a.begin(), a.end(), w) ? side_a : side_b).push_back(w);
    cert = make_certificate(g, "dense-c4", std::move(side_a), std::move(side_b));
    cert.guarantee = (best.cycles + best.denominator - 1) / best.denominator;
  }
  cert.trace.set("u", best.u);
  cert.trace.set("v", best.v);
  cert.trace.set("q_num", static_cast<std::int64_t>(best.cycles));
  cert.trace.set("q_den", static_cast<std::int64_t>(best.denominator));

  const std::uint64_t d = g.min_degree();
  const std::uint64_t n = g.n();
  if (d * d > 4 * n) {
    // q >= d²/(4n)  <=>  4n·c >= d²·den
    using U = unsigned __int128;
    if (U{4} * n * best.cycles < U{d} * d * best.denominator)
      throw std::logic_error("4-cycle ratio below d^2/(4n) on a triangle-free graph");
    cert.trace.set("q_bound_checked", 1);
  }
  if (cert.claimed_min_degree < cert.guarantee)
    throw std::logic_error("dense-c4 certificate below its guarantee");
  return cert;
}

}  // namespace dibs
