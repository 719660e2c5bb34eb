#include <doctest.h>

#include <cmath>
#include <map>

#include "dibs/binomial.hpp"
#include "dibs/degeneracy.hpp"
#include "dibs/errors.hpp"
#include "dibs/generators.hpp"
#include "dibs/sparse_extractor.hpp"
#include "oracles.hpp"

using namespace dibs;

namespace {

const Graph& c5_blowup(Vertex t) {
  static std::map<Vertex, Graph> cache;
  auto it = cache.find(t);
  if (it == cache.end()) it = cache.emplace(t, blowup(cycle_graph(5), std::vector<Vertex>(5, t))).first;
  return it->second;
}

}  // namespace

TEST_SUITE("sparse") {

TEST_CASE("parameters") {
  const auto p = SparseParams::for_degree(10000);
  CHECK(p.ell == 4);
  CHECK(p.p == doctest::Approx(1e-4));
  CHECK_THROWS_AS(SparseParams::for_degree(15), PreconditionError);
  CHECK(sparse_guarantee(2) == 1);
  CHECK(sparse_guarantee(86) == 2);
  CHECK(sparse_guarantee(172) == 3);
}

TEST_CASE("thinning probability") {
  SparseParams sp;
  sp.d = 10000;
  sp.p = 1e-4;
  sp.ell = 3;
  bool clamped = true;
  // Pr[Bin(10^4, 10^-4) >= 3] = 0.0803..., so p_u = 1e-4 / (0.9999 * 0.0803)
  CHECK(p_u(10000, sp, &clamped) == doctest::Approx(1.2454e-3).epsilon(1e-3));
  CHECK_FALSE(clamped);
  CHECK(p_u(10000, sp) == doctest::Approx(sp.p / ((1 - sp.p) * oracle::binom_tail(10000, sp.p, 3))).epsilon(1e-10));
  CHECK_THROWS_AS(p_u(2, sp), PreconditionError);
  sp.ell = 1;
  sp.p = 0.5;
  CHECK(p_u(1, sp, &clamped) == 1.0);
  CHECK(clamped);
}

TEST_CASE("samples are deterministic and satisfy their definitions") {
  const Graph& g = c5_blowup(20);
  const auto order = degeneracy_order(g);
  const auto params = SparseParams::for_degree(40);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const XYZSample s = sample_xyz(g, order, params, seed);
    const XYZSample again = sample_xyz(g, order, params, seed);
    CHECK(s.x == again.x);
    CHECK(s.y == again.y);
    CHECK(s.z == again.z);
    const auto in_x = membership(g.n(), s.x);
    const auto in_y = membership(g.n(), s.y);
    for (Vertex v : s.y) {
      CHECK_FALSE(in_x[v]);
      std::uint32_t k = 0;
      for (Vertex w : g.neighbors(v)) k += in_x[w];
      CHECK(k >= params.ell);
    }
    // Z: x-y edges whose x has >= 4 right neighbours inside X
    std::vector<Edge> z;
    for (Vertex x : s.x) {
      std::uint32_t r = 0;
      for (Vertex w : order.right_neighbors(g, x)) r += in_x[w];
      if (r < 4) continue;
      for (Vertex y : g.neighbors(x))
        if (in_y[y]) z.emplace_back(x, y);
    }
    std::sort(z.begin(), z.end());
    auto sz = s.z;
    std::sort(sz.begin(), sz.end());
    CHECK(sz == z);
    CHECK(s.y_edges == induced_edge_count(g, s.y));
    const std::int64_t l = params.ell;
    CHECK(s.scaled_objective(params.ell) ==
          3 * l * std::int64_t(s.y.size()) - l * std::int64_t(s.x.size()) -
              l * std::int64_t(s.y_edges) - 21 * std::int64_t(s.z.size()));
    const XYZCounts c = sample_counts(g, order, params, seed);
    CHECK(c.x == s.x.size());
    CHECK(c.y == s.y.size());
    CHECK(c.z == s.z.size());
    CHECK(c.scaled_objective(params.ell) == s.scaled_objective(params.ell));
  }
}

TEST_CASE("accepted samples satisfy the claim") {
  for (Vertex t : {10u, 20u, 50u}) {
    const Graph& g = c5_blowup(t);
    const auto order = degeneracy_order(g);
    const auto params = SparseParams::for_degree(2 * t);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      std::uint64_t used = 0;
      const XYZSample s = find_good_xyz(g, order, params, seed, &used);
      CHECK(s.accepted(params.ell));
      CHECK(used >= 1);
      CHECK(check_claim(g, order, s, params.ell).all());
    }
  }
}

TEST_CASE("retry exhaustion reports the best score") {
  const Graph& g = c5_blowup(20);
  const auto order = degeneracy_order(g);
  auto params = SparseParams::for_degree(40, 0);
  CHECK_THROWS_AS(find_good_xyz(g, order, params, 1), RetryExhausted);
}

TEST_CASE("end to end on blowups of C5") {
  for (Vertex t : {8u, 20u, 50u, 200u}) {
    const Graph& g = c5_blowup(t);
    const std::uint64_t d = 2 * t;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const BipartiteCert c = extract_sparse(g, d, seed);
      const auto rep = verify_bipartite_cert(g, c);
      CHECK(rep.ok);
      CHECK(rep.achieved_min_degree >= c.guarantee);
      CHECK(c.guarantee == sparse_guarantee(ell_of(d)));
      CHECK(c.trace.get("ell") == std::int64_t{ell_of(d)});
      CHECK(c.trace.get("d") == std::int64_t(d));
      CHECK(c.trace.has_note("log-base=natural"));
      // same seed, same certificate
      CHECK(certificate_to_string(extract_sparse(g, d, seed)) == certificate_to_string(c));
    }
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(extract_sparse(complete_graph(20), 16, 1), TriangleFound);
  CHECK_THROWS_AS(extract_sparse(c5_blowup(8), 17, 1), PreconditionError);
  CHECK_THROWS_AS(extract_sparse(c5_blowup(8), 10, 1), PreconditionError);
}

}  // TEST_SUITE
