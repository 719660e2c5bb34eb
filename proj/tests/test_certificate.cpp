#include <doctest.h>

#include <sstream>

#include "dibs/certificate.hpp"
#include "dibs/errors.hpp"
#include "dibs/generators.hpp"
#include "oracles.hpp"

using namespace dibs;

TEST_SUITE("certificate") {

TEST_CASE("text round trip keeps every field") {
  const Graph g = complete_bipartite(3, 4);
  BipartiteCert c = make_certificate(g, "dense-pair", {2, 0, 1}, {6, 3, 4, 5});
  c.guarantee = 2;
  c.trace.seed = 99;
  c.trace.retries = 4;
  c.trace.retry_budget = 10;
  c.trace.set("Y", 17);
  c.trace.set("neg", -3);
  c.trace.note("mode=exhaustive");
  CHECK(c.side_a == VertexSet{0, 1, 2});
  CHECK(c.claimed_min_degree == 3);

  std::stringstream ss(certificate_to_string(c));
  const BipartiteCert r = read_certificate(ss);
  CHECK(r.algorithm == c.algorithm);
  CHECK(r.side_a == c.side_a);
  CHECK(r.side_b == c.side_b);
  CHECK(r.guarantee == 2);
  CHECK(r.claimed_min_degree == 3);
  CHECK(r.trace.seed == 99);
  CHECK(r.trace.retries == 4);
  CHECK(r.trace.retry_budget == 10);
  CHECK(r.trace.stage_stats == c.trace.stage_stats);
  CHECK(r.trace.notes == c.trace.notes);
  CHECK(certificate_to_string(r) == certificate_to_string(c));
}

TEST_CASE("reader rejects damaged documents") {
  const BipartiteCert c = make_certificate(complete_bipartite(1, 1), "x", {0}, {1});
  const std::string text = certificate_to_string(c);
  for (const std::string& bad :
       {std::string(""), text.substr(0, text.size() - 4), "dibs-certificate 2\n" + text.substr(19),
        text.substr(0, text.size() - 4) + "junk 1\nend\n"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_certificate(in), InputError);
  }
}

TEST_CASE("verifier names what is wrong") {
  const Graph c5 = cycle_graph(5);
  BipartiteCert c;
  c.side_a = {0, 2};
  c.side_b = {1, 3};
  c.claimed_min_degree = 1;
  auto rep = verify_bipartite_cert(c5, c);
  CHECK(rep.ok);
  CHECK(rep.achieved_min_degree == 1);
  CHECK(rep.edges_across == 3);

  c.side_b = {1, 2};
  rep = verify_bipartite_cert(c5, c);
  CHECK(rep.failure == "overlap");
  CHECK(rep.witness == std::vector<std::uint64_t>{2});

  c.side_a = {0, 1};
  c.side_b = {3};
  rep = verify_bipartite_cert(c5, c);
  CHECK(rep.failure == "edge-in-side-a");
  CHECK(rep.witness == std::vector<std::uint64_t>{0, 1});

  c.side_a = {0};
  c.side_b = {1, 3};
  rep = verify_bipartite_cert(c5, c);
  CHECK(rep.failure == "low-degree");
  CHECK(rep.witness == std::vector<std::uint64_t>{3});

  c.side_b = {};
  rep = verify_bipartite_cert(c5, c);
  CHECK(rep.failure == "empty-side");

  c.side_b = {7};
  CHECK_THROWS_AS(verify_bipartite_cert(c5, c), PreconditionError);
}

TEST_CASE("verifier agrees with the brute-force check on random certificates") {
  SplitMix64 rng(21);
  int valid = 0;
  for (int i = 0; i < 2000; ++i) {
    const Graph g = oracle::random_graph(9, 0.4, rng);
    VertexSet a, b;
    for (Vertex v = 0; v < g.n(); ++v) {
      const auto r = rng.below(4);
      if (r == 0) a.push_back(v);
      if (r == 1) b.push_back(v);
    }
    if (rng.below(10) == 0 && !a.empty()) b.push_back(a.front());  // overlap now and then
    std::sort(b.begin(), b.end());
    if (a.empty() || b.empty()) continue;
    BipartiteCert c;
    c.side_a = a;
    c.side_b = b;
    c.claimed_min_degree = 1 + rng.below(3);
    const auto rep = verify_bipartite_cert(g, c);
    const auto ref = oracle::check_cert(g, a, b);
    const bool expect = ref.valid && ref.min_degree >= c.claimed_min_degree;
    CHECK(rep.ok == expect);
    if (ref.valid) CHECK(cross_min_degree(g, a, b) == ref.min_degree);
    valid += expect;
  }
  CHECK(valid > 20);
}

TEST_CASE("tampering with a valid certificate is caught") {
  const Graph g = blowup(cycle_graph(5), std::vector<Vertex>(5, 4));
  const BipartiteCert good = make_certificate(g, "t", {0, 1, 2, 3}, {4, 5, 6, 7});
  REQUIRE(verify_bipartite_cert(g, good).ok);
  REQUIRE(good.claimed_min_degree == 4);

  BipartiteCert inflated = good;
  inflated.claimed_min_degree = 5;
  CHECK_FALSE(verify_bipartite_cert(g, inflated).ok);

  BipartiteCert moved = good;
  moved.side_a.push_back(12);  // part 3 sees neither part 0 nor part 1
  CHECK(verify_bipartite_cert(g, moved).failure == "low-degree");

  BipartiteCert inner = good;
  inner.side_a = {0, 4};
  inner.side_b = {5};
  CHECK(verify_bipartite_cert(g, inner).failure == "edge-in-side-a");
}

}  // TEST_SUITE
