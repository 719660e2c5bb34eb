#include <doctest.h>

#include "dibs/dense_extractor.hpp"
#include "dibs/errors.hpp"
#include "dibs/generators.hpp"
#include "oracles.hpp"

using namespace dibs;

namespace {

// first pair in lexicographic order with 2n·e(Y) > d²|Y|, straight from the definition
std::optional<std::pair<Vertex, Vertex>> first_pair_brute(const Graph& g, std::uint64_t d) {
  const auto a = oracle::adjacency(g);
  std::vector<VertexSet> av(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex w = 0; w < g.n() && av[v].size() < d; ++w)
      if (a[v][w]) av[v].push_back(w);
  }
  for (Vertex x1 = 0; x1 < g.n(); ++x1)
    for (Vertex x2 = x1 + 1; x2 < g.n(); ++x2) {
      VertexSet y;
      for (Vertex v = 0; v < g.n(); ++v)
        if (std::count(av[v].begin(), av[v].end(), x1) || std::count(av[v].begin(), av[v].end(), x2))
          y.push_back(v);
      std::uint64_t e = 0;
      for (Vertex u : y)
        for (Vertex v : y) e += u < v && a[u][v];
      if (2 * std::uint64_t{g.n()} * e > d * d * y.size()) return std::make_pair(x1, x2);
    }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("dense") {

TEST_CASE("guarantees") {
  CHECK(dense_pair_guarantee(500, 200) == 40);
  CHECK(dense_pair_guarantee(100, 50) == 13);
  CHECK(dense_pair_guarantee(7, 1) == 1);
}

TEST_CASE("A_v holds the d smallest neighbours") {
  const Graph g = cycle_graph(6);
  const auto a = fix_A(g, 1);
  CHECK(a[0] == VertexSet{1});
  CHECK(a[3] == VertexSet{2});
  try {
    fix_A(path_graph(4), 2);
    FAIL("path endpoint has degree 1");
  } catch (const PreconditionError& e) {
    CHECK(e.reason() == "degree-too-small");
    CHECK(e.witness() == std::vector<std::uint64_t>{0});
  }
}

TEST_CASE("dense pair on the C5 blowup") {
  const Graph g = blowup(cycle_graph(5), std::vector<Vertex>(5, 100));
  const BipartiteCert c = extract_dense_pair(g, 200);
  const auto rep = verify_bipartite_cert(g, c);
  CHECK(rep.ok);
  CHECK(c.guarantee == 40);
  CHECK(rep.achieved_min_degree == 100);
  CHECK(c.trace.get("x1") == 0);
  CHECK(c.trace.get("x2") == 100);
  CHECK(c.trace.has_note("mode=exhaustive"));
}

TEST_CASE("dense pair on a complete bipartite graph keeps everything") {
  const Graph g = complete_bipartite(50, 50);
  const BipartiteCert c = extract_dense_pair(g, 50);
  const auto rep = verify_bipartite_cert(g, c);
  CHECK(rep.ok);
  CHECK(c.size() == 100);
  CHECK(rep.achieved_min_degree == 50);
  CHECK(c.guarantee == 13);
}

TEST_CASE("dense pair picks the first qualifying pair and meets its guarantee") {
  SplitMix64 rng(51);
  int runs = 0;
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_triangle_free(6 + static_cast<Vertex>(rng.below(14)), 0.6, rng);
    const std::uint64_t d = g.min_degree();
    if (d == 0) continue;
    ++runs;
    const auto brute = first_pair_brute(g, d);
    REQUIRE(brute.has_value());  // some pair always qualifies
    const BipartiteCert c = extract_dense_pair(g, d);
    CHECK(c.trace.get("x1") == std::int64_t{brute->first});
    CHECK(c.trace.get("x2") == std::int64_t{brute->second});
    const auto ref = oracle::check_cert(g, c.side_a, c.side_b);
    CHECK(ref.valid);
    CHECK(ref.min_degree >= dense_pair_guarantee(g.n(), d));
    CHECK(ref.min_degree == c.claimed_min_degree);
  }
  CHECK(runs > 50);
}

TEST_CASE("sampled mode") {
  const Graph g = blowup(cycle_graph(5), std::vector<Vertex>(5, 20));
  const BipartiteCert a = extract_dense_pair(g, 40, PairMode::Sampled, 7);
  CHECK(verify_bipartite_cert(g, a).ok);
  CHECK(a.trace.has_note("mode=sampled"));
  CHECK(certificate_to_string(a) == certificate_to_string(extract_dense_pair(g, 40, PairMode::Sampled, 7)));
}

TEST_CASE("dense pair preconditions") {
  CHECK_THROWS_AS(extract_dense_pair(complete_graph(5), 4), TriangleFound);
  CHECK_THROWS_AS(extract_dense_pair(cycle_graph(5), 3), PreconditionError);
  CHECK_THROWS_AS(extract_dense_pair(cycle_graph(5), 0), PreconditionError);
}

TEST_CASE("c4 counts") {
  for (Vertex t : {1u, 2u, 5u, 10u}) {
    const Graph g = blowup(cycle_graph(5), std::vector<Vertex>(5, t));
    // edge between parts 0 and 1: N(u)∖v is part 1 ∪ part 4 minus v, N(v)∖u is parts 0, 2 minus u
    const Vertex u = 0, v = t;
    CHECK(c4_through_edge(g, u, v) == std::uint64_t{t - 1} * (3 * t - 1));
    CHECK(c4_through_edge(g, u, v) == oracle::c4_through(g, u, v));
  }
  CHECK(c4_through_edge(complete_bipartite(3, 3), 0, 3) == 4);
  CHECK_THROWS_AS(c4_through_edge(cycle_graph(5), 0, 2), PreconditionError);
}

TEST_CASE("c4 extractor on the C5 blowup") {
  const Graph g = blowup(cycle_graph(5), std::vector<Vertex>(5, 10));
  const BipartiteCert c = extract_dense_c4(g);
  const auto rep = verify_bipartite_cert(g, c);
  CHECK(rep.ok);
  CHECK(c.trace.get("q_num") == 261);
  CHECK(c.trace.get("q_den") == 38);
  CHECK(c.guarantee == 7);
  CHECK(rep.achieved_min_degree >= 7);
  CHECK(c.trace.get("q_bound_checked") == 1);
}

TEST_CASE("c4 extractor on random triangle-free graphs") {
  SplitMix64 rng(52);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_triangle_free(4 + static_cast<Vertex>(rng.below(14)), 0.5, rng);
    if (g.m() == 0) {
      CHECK_THROWS_AS(extract_dense_c4(g), PreconditionError);
      continue;
    }
    const BipartiteCert c = extract_dense_c4(g);
    const auto ref = oracle::check_cert(g, c.side_a, c.side_b);
    REQUIRE(ref.valid);
    CHECK(ref.min_degree >= c.guarantee);
    bool any = false;
    for (const Edge& e : g.edges()) any = any || oracle::c4_through(g, e.first, e.second) > 0;
    CHECK(c.trace.has_note("degenerate") == !any);
    if (!any) CHECK(c.size() == 2);
  }
}

}  // TEST_SUITE
