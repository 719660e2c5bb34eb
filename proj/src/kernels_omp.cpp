#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>

#include "dibs/kernels.hpp"

namespace dibs::kernels::omp {

namespace {

template <class T>
void atomic_min(std::atomic<T>& target, T value) {
  T cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

}  // namespace

std::optional<Triangle> first_triangle(const Graph& g) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best_a{kNone};
  std::vector<Triangle> found(g.n());
  const std::int64_t n = g.n();
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t ai = 0; ai < n; ++ai) {
    const Vertex a = static_cast<Vertex>(ai);
    if (a > best_a.load(std::memory_order_relaxed)) continue;
    auto na = g.neighbors(a);
    for (Vertex b : na) {
      if (b <= a) continue;
      auto nb = g.neighbors(b);
      auto ia = std::upper_bound(na.begin(), na.end(), b);
      auto ib = std::upper_bound(nb.begin(), nb.end(), b);
      bool hit = false;
      while (ia != na.end() && ib != nb.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { hit = true; break; }
      }
      if (hit) {
        found[a] = Triangle{a, b, *ia};
        atomic_min<std::uint64_t>(best_a, a);
        break;
      }
    }
  }
  if (best_a.load() == kNone) return std::nullopt;
  return found[best_a.load()];
}

std::uint64_t count_triangles(const Graph& g) {
  std::uint64_t total = 0;
  const std::int64_t n = g.n();
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
  for (std::int64_t ai = 0; ai < n; ++ai) {
    const Vertex a = static_cast<Vertex>(ai);
    auto na = g.neighbors(a);
    for (Vertex b : na) {
      if (b <= a) continue;
      auto nb = g.neighbors(b);
      auto ia = std::upper_bound(na.begin(), na.end(), b);
      auto ib = std::upper_bound(nb.begin(), nb.end(), b);
      while (ia != na.end() && ib != nb.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++total; ++ia; ++ib; }
      }
    }
  }
  return total;
}

std::optional<PairHit> first_good_pair(const Graph& g, const std::vector<VertexSet>& reverse,
                                       std::uint64_t d) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t n = g.n();
  std::atomic<std::uint64_t> best{kNone};  // x1 * n + x2
  std::vector<PairHit> hits(n);
#pragma omp parallel
  {
    std::vector<char> scratch(n, 0);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(n); ++xi) {
      const Vertex x1 = static_cast<Vertex>(xi);
      for (Vertex x2 = x1 + 1; x2 < n; ++x2) {
        if (std::uint64_t{x1} * n + x2 > best.load(std::memory_order_relaxed)) break;
        PairHit hit = pair_statistics(g, reverse, x1, x2, scratch);
        if (pair_qualifies(hit, n, d)) {
          hits[x1] = hit;
          atomic_min<std::uint64_t>(best, std::uint64_t{x1} * n + x2);
          break;
        }
      }
    }
  }
  if (best.load() == kNone) return std::nullopt;
  return hits[best.load() / n];
}

C4Best best_c4_edge(const Graph& g) {
  const std::int64_t n = g.n();
  const int threads = omp_get_max_threads();
  std::vector<C4Best> local(threads);
  std::vector<char> have(threads, 0);
  std::vector<char> any_nonzero(threads, 0);
#pragma omp parallel
  {
    const int tid = omp_get_thread_num();
    std::vector<std::uint32_t> mark(g.n(), 0);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t ui = 0; ui < n; ++ui) {
      const Vertex u = static_cast<Vertex>(ui);
      for (Vertex v : g.neighbors(u)) {
        if (v <= u) continue;
        C4Best cand{u, v, c4_count(g, u, v, mark),
                    std::uint64_t{g.degree(u)} + g.degree(v) - 2, true};
        if (cand.cycles) any_nonzero[tid] = 1;
        if (!have[tid] || c4_better(cand, local[tid])) {
          local[tid] = cand;
          have[tid] = 1;
        }
      }
    }
  }
  C4Best best;
  bool found = false;
  for (int t = 0; t < threads; ++t) {
    if (have[t] && (!found || c4_better(local[t], best))) {
      best = local[t];
      found = true;
    }
  }
  best.all_zero = std::none_of(any_nonzero.begin(), any_nonzero.end(), [](char c) { return c; });
  return best;
}

std::optional<std::uint64_t> first_success(std::uint64_t budget,
                                           const std::function<bool(std::uint64_t)>& accept) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  const std::uint64_t chunk = static_cast<std::uint64_t>(omp_get_max_threads()) * 4;
  for (std::uint64_t start = 0; start < budget && best.load() == kNone; start += chunk) {
    const std::int64_t stop = static_cast<std::int64_t>(std::min(budget, start + chunk));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t t = static_cast<std::int64_t>(start); t < stop; ++t) {
      if (accept(static_cast<std::uint64_t>(t))) atomic_min<std::uint64_t>(best, t);
    }
  }
  if (best.load() == kNone) return std::nullopt;
  return best.load();
}

std::vector<std::int64_t> map_trials(std::uint64_t trials,
                                     const std::function<std::int64_t(std::uint64_t)>& f) {
  std::vector<std::int64_t> out(trials);
  const std::int64_t count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t t = 0; t < count; ++t) out[t] = f(static_cast<std::uint64_t>(t));
  return out;
}

}  // namespace dibs::kernels::omp
