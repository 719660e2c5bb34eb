#include <doctest.h>

#include <sstream>

#include "dibs/coloring.hpp"
#include "dibs/degeneracy.hpp"
#include "dibs/errors.hpp"
#include "dibs/generators.hpp"
#include "dibs/graph.hpp"
#include "dibs/graph_io.hpp"
#include "dibs/triangles.hpp"
#include "oracles.hpp"

using namespace dibs;

TEST_SUITE("graph") {

TEST_CASE("build_graph collapses duplicates and sorts neighbours") {
  const Graph g = build_graph(4, {{2, 0}, {0, 2}, {1, 3}, {3, 1}, {0, 1}});
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(2, 0));
  CHECK_FALSE(g.has_edge(2, 3));
  auto nb = g.neighbors(0);
  CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{1, 2});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
}

TEST_CASE("build_graph names the offending pair") {
  try {
    build_graph(3, {{0, 1}, {1, 1}});
    FAIL("self-loop accepted");
  } catch (const InputError& e) {
    CHECK(e.index() == 1);
  }
  try {
    build_graph(3, {{0, 1}, {1, 2}, {2, 3}});
    FAIL("out-of-range endpoint accepted");
  } catch (const InputError& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("edge list text round trip") {
  SplitMix64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(15, 0.3, rng);
    std::stringstream ss;
    write_graph(ss, g, {"model test", "seed 3"});
    CHECK(ss.str().rfind("# model test\n# seed 3\n", 0) == 0);
    CHECK(read_graph(ss) == g);
  }
}

TEST_CASE("reader rejects malformed input") {
  std::istringstream count_mismatch("3 2\n0 1\n");
  CHECK_THROWS_AS(read_graph(count_mismatch), InputError);
  std::istringstream bad_token("3 1\n0 x\n");
  CHECK_THROWS_AS(read_graph(bad_token), InputError);
  std::istringstream out_of_range("3 1\n0 3\n");
  CHECK_THROWS_AS(read_graph(out_of_range), InputError);
}

TEST_CASE("induced subgraph relabels and lifts") {
  const Graph c5 = cycle_graph(5);
  const VertexSet s{0, 1, 2};
  const auto sub = induced_subgraph(c5, s);
  CHECK(sub.graph.n() == 3);
  CHECK(sub.graph.m() == 2);
  CHECK(sub.lift(std::vector<Vertex>{0, 2}) == VertexSet{0, 2});
  CHECK(induced_edge_count(c5, s) == 2);
  CHECK(edges_between(c5, VertexSet{0}, VertexSet{1, 4}) == 2);
}

TEST_CASE("degeneracy order matches the brute-force removal order") {
  SplitMix64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(1 + static_cast<Vertex>(rng.below(12)), 0.4, rng);
    const DegeneracyOrder o = degeneracy_order(g);
    CHECK(o.order == oracle::degeneracy_order(g));
    std::uint32_t worst = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      CHECK(o.order[o.position[v]] == v);
      CHECK(o.right_neighbors(g, v).size() == o.right_degree[v]);
      worst = std::max(worst, o.right_degree[v]);
    }
    CHECK(o.degeneracy == worst);
  }
}

TEST_CASE("core is the maximal set of the required minimum degree") {
  SplitMix64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(12, 0.45, rng);
    for (std::uint32_t t = 0; t <= 5; ++t) {
      const VertexSet c = core(g, t);
      CHECK(c == oracle::core(g, t));
      if (!c.empty()) CHECK(oracle::min_degree_of(g, c) >= t);
    }
  }
}

TEST_CASE("half_avg peel keeps degree above half the entry average") {
  SplitMix64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(14, 0.3, rng);
    if (g.m() == 0) {
      CHECK_THROWS_AS(half_avg_subgraph(g), PreconditionError);
      continue;
    }
    const VertexSet s = half_avg_subgraph(g);
    REQUIRE_FALSE(s.empty());
    // every kept vertex: deg·n >= m, i.e. deg >= avg/2
    for (Vertex v : s) {
      std::uint64_t d = 0;
      for (Vertex w : g.neighbors(v)) d += std::binary_search(s.begin(), s.end(), w);
      CHECK(d * g.n() >= g.m());
    }
  }
}

TEST_CASE("minimal min-degree subgraph is minimal") {
  SplitMix64 rng(14);
  for (int i = 0; i < 40; ++i) {
    const Graph g = oracle::random_graph(11, 0.5, rng);
    const std::uint32_t d = 2;
    if (oracle::core(g, d).empty()) {
      CHECK_THROWS_AS(minimal_min_degree_subgraph(g, d), PreconditionError);
      continue;
    }
    const VertexSet s = minimal_min_degree_subgraph(g, d);
    CHECK(oracle::min_degree_of(g, s) >= d);
    for (Vertex v : s) {
      VertexSet rest;
      for (Vertex w : s)
        if (w != v) rest.push_back(w);
      CHECK(core_within(g, rest, d).empty());
    }
  }
}

TEST_CASE("greedy colouring is proper and uses at most degeneracy + 1 colours") {
  SplitMix64 rng(15);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(13, 0.35, rng);
    const DegeneracyOrder o = degeneracy_order(g);
    const Coloring c = greedy_color(g, o);
    CHECK(is_proper(g, c));
    CHECK(c.num_colors <= o.degeneracy + 1);
  }
  CHECK(greedy_color(cycle_graph(5), degeneracy_order(cycle_graph(5))).num_colors == 3);
}

TEST_CASE("Turan independent set reaches n / (avg + 1)") {
  SplitMix64 rng(16);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(15, 0.3, rng);
    const VertexSet s = turan_independent_set(g);
    CHECK(is_independent(g, s));
    // |S| (2m/n + 1) >= n
    CHECK(s.size() * (2 * g.m() + g.n()) >= std::uint64_t{g.n()} * g.n());
  }
}

TEST_CASE("triangle listing matches the triple loop") {
  SplitMix64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(10, 0.5, rng);
    const auto tris = list_triangles(g);
    const auto ref = oracle::triangles(g);
    REQUIRE(tris.size() == ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) CHECK(tris[k] == ref[k]);
    if (ref.empty()) {
      CHECK_FALSE(find_triangle(g).has_value());
      CHECK_NOTHROW(require_triangle_free(g));
    } else {
      CHECK(*find_triangle(g) == ref.front());
      CHECK_THROWS_AS(require_triangle_free(g), TriangleFound);
    }
  }
}

TEST_CASE("triangle listing restricted to a vertex set") {
  const Graph k4 = complete_graph(4);
  CHECK(list_triangles(k4, VertexSet{0, 1, 3}).size() == 1);
  CHECK(list_triangles(k4, VertexSet{0, 1}).empty());
}

TEST_CASE("clique search") {
  CHECK(find_clique(complete_graph(5), 5).has_value());
  CHECK_FALSE(find_clique(complete_multipartite({3, 3, 3}), 4).has_value());
  auto k3 = find_clique(complete_multipartite({3, 3, 3}), 3);
  REQUIRE(k3.has_value());
  CHECK(k3->size() == 3);
  CHECK_FALSE(find_clique(petersen_graph(), 3).has_value());
}

}  // TEST_SUITE
