#include <doctest.h>

#include <cmath>

#include "dibs/degeneracy.hpp"
#include "dibs/errors.hpp"
#include "dibs/generators.hpp"
#include "dibs/hfree_reduction.hpp"
#include "dibs/triangles.hpp"
#include "oracles.hpp"

using namespace dibs;

TEST_SUITE("reduction") {

TEST_CASE("integer root and threshold helpers") {
  for (std::uint64_t d = 1; d < 5000; ++d) {
    const std::uint64_t r = sixth_root_ceil(d);
    auto p6 = [](std::uint64_t x) { return x * x * x * x * x * x; };
    CHECK(p6(r) >= d);
    CHECK(p6(r - 1) < d);
  }
  CHECK(sixth_root_ceil(64) == 2);
  CHECK(sixth_root_ceil(65) == 3);
  CHECK(sixth_root_ceil(std::uint64_t{1} << 60) == 1024);
  for (std::uint64_t d = 1; d < 60; ++d)
    for (std::uint64_t e = 0; e < 150; ++e) {
      const unsigned __int128 e6 = static_cast<unsigned __int128>(e) * e * e * e * e * e;
      const unsigned __int128 d7 = static_cast<unsigned __int128>(d) * d * d * d * d * d * d;
      CHECK(exceeds_seven_sixths(e, d) == (e6 > d7));
      for (std::uint64_t w = 1; w < 40; w += 7) {
        const unsigned __int128 w6 = static_cast<unsigned __int128>(w) * w * w * w * w * w;
        CHECK(exceeds_sixth_root(e, w, d) == (e6 > d * w6));
      }
    }
  // beyond 128 bits
  CHECK(exceeds_seven_sixths(std::uint64_t{1} << 40, std::uint64_t{1} << 34));
  CHECK_FALSE(exceeds_seven_sixths(std::uint64_t{1} << 35, std::uint64_t{1} << 30));
}

TEST_CASE("sampled W is U minus the leftmost vertex of each triangle") {
  SplitMix64 rng(61);
  for (int i = 0; i < 150; ++i) {
    const Graph g = oracle::random_graph(14, 0.5, rng);
    const auto order = degeneracy_order(g);
    const double p = 0.3 + 0.6 * rng.unit();
    const USample s = sample_u(g, order, p, rng());
    const auto in_u = membership(g.n(), s.u);
    std::vector<char> drop(g.n(), 0);
    std::uint64_t tri = 0;
    for (const auto& t : oracle::triangles(g)) {
      if (!(in_u[t[0]] && in_u[t[1]] && in_u[t[2]])) continue;
      ++tri;
      Vertex left = t[0];
      for (Vertex v : t)
        if (order.position[v] < order.position[left]) left = v;
      drop[left] = 1;
    }
    VertexSet w;
    for (Vertex v : s.u)
      if (!drop[v]) w.push_back(v);
    CHECK(s.w == w);
    CHECK(s.x1 == induced_edge_count(g, s.u));
    CHECK(s.x2 == tri);
    CHECK(s.w_edges == induced_edge_count(g, s.w));
    CHECK(list_triangles(g, s.w).empty());
    CHECK(std::int64_t(s.w_edges) >= std::int64_t(s.x1) - 2 * std::int64_t(s.x2) - std::int64_t(s.x3));
  }
}

TEST_CASE("per-sample lower bound on a dense multipartite graph") {
  const Graph g = complete_multipartite({30, 30, 30, 30});
  const auto order = degeneracy_order(g);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const USample s = sample_u(g, order, 0.1, seed);
    CHECK(list_triangles(g, s.w).empty());
    CHECK(std::int64_t(s.w_edges) >= std::int64_t(s.x1) - 2 * std::int64_t(s.x2) - std::int64_t(s.x3));
  }
}

TEST_CASE("K_{60,60,60} through the sampled branch") {
  const Graph g = complete_multipartite({60, 60, 60});
  ReductionOptions opt;
  opt.check_every_sample = true;
  const ReductionResult r = reduce_extract_full(g, 4, 60, 1, opt);
  const auto rep = verify_bipartite_cert(g, r.cert);
  CHECK(rep.ok);
  CHECK(rep.achieved_min_degree >= r.cert.guarantee);
  CHECK(r.cert.algorithm == "reduce");
  REQUIRE(r.path.size() >= 2);
  CHECK(r.path.back().branch == 'p');
  for (const auto& step : r.path) {
    if (step.branch != 'c') continue;
    CHECK(list_triangles(g, step.w).empty());
    CHECK(step.w_edges == induced_edge_count(g, step.w));
    CHECK(exceeds_sixth_root(step.w_edges, step.w.size(), step.d));
    CHECK(step.samples_checked >= step.trials);  // speculative batches are checked too
  }
  CHECK(r.cert.trace.has_note("K_t-free checked"));
  // deterministic in the seed
  CHECK(certificate_to_string(reduce_extract(g, 4, 60, 1)) == certificate_to_string(r.cert));

  opt.allow_dense_fallback = false;
  try {
    reduce_extract(g, 4, 60, 1, opt);
    FAIL("terminal degree below 16 accepted");
  } catch (const PreconditionError& e) {
    CHECK(e.reason() == "degree-too-small");
  }
}

TEST_CASE("K_t in the input is rejected with a witness") {
  try {
    reduce_extract(complete_multipartite({5, 5, 5, 5}), 4, 10, 1);
    FAIL("K_4 accepted");
  } catch (const PreconditionError& e) {
    CHECK(e.reason() == "clique");
    const auto& w = e.witness();
    REQUIRE(w.size() == 4);
    const Graph g = complete_multipartite({5, 5, 5, 5});
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) CHECK(g.has_edge(Vertex(w[i]), Vertex(w[j])));
  }
  CHECK_THROWS_AS(reduce_extract(cycle_graph(5), 2, 2, 1), PreconditionError);
  CHECK_THROWS_AS(reduce_extract(cycle_graph(5), 3, 3, 1), PreconditionError);
}

TEST_CASE("triangle-free input at t = 3") {
  const Graph g = blowup(cycle_graph(5), std::vector<Vertex>(5, 20));
  const ReductionResult r = reduce_extract_full(g, 3, 40, 2);
  CHECK(verify_bipartite_cert(g, r.cert).ok);
  CHECK(verify_bipartite_cert(g, r.cert).achieved_min_degree >= r.cert.guarantee);
  for (const auto& step : r.path) CHECK(step.branch != 'b');  // N⁺(v) has no edges
}

TEST_CASE("random K_4-free inputs") {
  SplitMix64 rng(62);
  int ran = 0;
  for (int i = 0; i < 60; ++i) {
    const Vertex n = 12 + static_cast<Vertex>(rng.below(20));
    Graph g = oracle::random_graph(n, 0.25, rng);
    if (find_clique(g, 4)) continue;
    const std::uint64_t d = std::max<std::uint64_t>(1, g.min_degree());
    if (core(g, static_cast<std::uint32_t>(d)).empty()) continue;
    ++ran;
    try {
      const BipartiteCert c = reduce_extract(g, 4, d, rng());
      const auto ref = oracle::check_cert(g, c.side_a, c.side_b);
      CHECK(ref.valid);
      CHECK(ref.min_degree >= c.guarantee);
    } catch (const RetryExhausted&) {
      // small graphs may never pass the sampling threshold; that is reported, not faked
    }
  }
  CHECK(ran > 5);
}

}  // TEST_SUITE
