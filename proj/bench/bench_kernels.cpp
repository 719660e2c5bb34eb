// Serial reference vs OpenMP kernels on generated triangle-free instances.

#include <benchmark/benchmark.h>

#include <map>

#include "dibs/dense_extractor.hpp"
#include "dibs/generators.hpp"
#include "dibs/kernels.hpp"
#include "dibs/rng.hpp"
#include "dibs/sparse_extractor.hpp"

namespace {

const dibs::Graph& c5_blowup(int t) {
  static std::map<int, dibs::Graph> cache;
  auto it = cache.find(t);
  if (it == cache.end())
    it = cache.emplace(t, dibs::blowup(dibs::cycle_graph(5), std::vector<dibs::Vertex>(5, t))).first;
  return it->second;
}

const dibs::Graph& alon(unsigned k) {
  static std::map<unsigned, dibs::Graph> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, dibs::alon_graph(k)).first;
  return it->second;
}

std::vector<dibs::VertexSet> reverse_lists(const dibs::Graph& g, std::uint64_t d) {
  const auto a = dibs::fix_A(g, d);
  std::vector<dibs::VertexSet> r(g.n());
  for (dibs::Vertex v = 0; v < g.n(); ++v)
    for (auto x : a[v]) r[x].push_back(v);
  return r;
}

template <bool Omp>
void BM_TriangleScan(benchmark::State& state) {
  const auto& g = alon(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    auto t = Omp ? dibs::kernels::omp::first_triangle(g) : dibs::kernels::serial::first_triangle(g);
    benchmark::DoNotOptimize(t);
  }
}

template <bool Omp>
void BM_FirstGoodPair(benchmark::State& state) {
  const auto& g = c5_blowup(static_cast<int>(state.range(0)));
  const std::uint64_t d = g.min_degree();
  const auto rev = reverse_lists(g, d);
  for (auto _ : state) {
    auto hit = Omp ? dibs::kernels::omp::first_good_pair(g, rev, d)
                   : dibs::kernels::serial::first_good_pair(g, rev, d);
    benchmark::DoNotOptimize(hit);
  }
}

template <bool Omp>
void BM_BestC4Edge(benchmark::State& state) {
  const auto& g = c5_blowup(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto best = Omp ? dibs::kernels::omp::best_c4_edge(g) : dibs::kernels::serial::best_c4_edge(g);
    benchmark::DoNotOptimize(best);
  }
}

template <bool Omp>
void BM_XYZTrials(benchmark::State& state) {
  const auto& g = alon(4);
  const auto order = dibs::degeneracy_order(g);
  const auto params = dibs::SparseParams::for_degree(g.min_degree());
  const std::uint64_t trials = static_cast<std::uint64_t>(state.range(0));
  auto f = [&](std::uint64_t t) {
    return dibs::sample_counts(g, order, params, dibs::substream(7, t)).scaled_objective(params.ell);
  };
  for (auto _ : state) {
    auto v = Omp ? dibs::kernels::omp::map_trials(trials, f) : dibs::kernels::serial::map_trials(trials, f);
    benchmark::DoNotOptimize(v);
  }
}

}  // namespace

BENCHMARK(BM_TriangleScan<false>)->Arg(3)->Arg(4);
BENCHMARK(BM_TriangleScan<true>)->Arg(3)->Arg(4);
BENCHMARK(BM_FirstGoodPair<false>)->Arg(20)->Arg(50);
BENCHMARK(BM_FirstGoodPair<true>)->Arg(20)->Arg(50);
BENCHMARK(BM_BestC4Edge<false>)->Arg(20)->Arg(50);
BENCHMARK(BM_BestC4Edge<true>)->Arg(20)->Arg(50);
BENCHMARK(BM_XYZTrials<false>)->Arg(64);
BENCHMARK(BM_XYZTrials<true>)->Arg(64);

BENCHMARK_MAIN();
