#include <algorithm>

#include "dibs/kernels.hpp"

namespace dibs::kernels {

PairHit pair_statistics(const Graph& g, const std::vector<VertexSet>& reverse, Vertex x1, Vertex x2,
                        std::vector<char>& scratch) {
  PairHit hit{x1, x2, 0, 0};
  for (Vertex v : reverse[x1]) {
    if (!scratch[v]) ++hit.y_size;
    scratch[v] = 1;
  }
  for (Vertex v : reverse[x2]) {
    if (!scratch[v]) ++hit.y_size;
    scratch[v] = 1;
  }
  std::uint64_t twice = 0;
  auto count = [&](Vertex v) {
    for (Vertex w : g.neighbors(v)) twice += scratch[w];
  };
  for (Vertex v : reverse[x1]) count(v);
  for (Vertex v : reverse[x2])
    if (!std::binary_search(reverse[x1].begin(), reverse[x1].end(), v)) count(v);
  for (Vertex v : reverse[x1]) scratch[v] = 0;
  for (Vertex v : reverse[x2]) scratch[v] = 0;
  hit.y_edges = twice / 2;
  return hit;
}

bool pair_qualifies(const PairHit& hit, std::uint64_t n, std::uint64_t d) {
  using U = unsigned __int128;
  return U{2} * n * hit.y_edges > U{d} * d * hit.y_size;
}

std::uint64_t c4_count(const Graph& g, Vertex u, Vertex v, std::vector<std::uint32_t>& mark) {
  for (Vertex w : g.neighbors(v))
    if (w != u) mark[w] = 1;
  std::uint64_t count = 0;
  for (Vertex w : g.neighbors(u)) {
    if (w == v) continue;
    for (Vertex x : g.neighbors(w)) count += mark[x];
  }
  for (Vertex w : g.neighbors(v)) mark[w] = 0;
  return count;
}

bool c4_better(const C4Best& a, const C4Best& b) {
  using U = unsigned __int128;
  // a zero denominator (isolated edge) ranks as ratio 0
  const U num_a = a.denominator ? a.cycles : 0, den_a = a.denominator ? a.denominator : 1;
  const U num_b = b.denominator ? b.cycles : 0, den_b = b.denominator ? b.denominator : 1;
  if (num_a * den_b != num_b * den_a) return num_a * den_b > num_b * den_a;
  return std::pair(a.u, a.v) < std::pair(b.u, b.v);
}

namespace serial {

std::optional<Triangle> first_triangle(const Graph& g) {
  for (Vertex a = 0; a < g.n(); ++a) {
    auto na = g.neighbors(a);
    for (Vertex b : na) {
      if (b <= a) continue;
      auto nb = g.neighbors(b);
      auto ia = std::upper_bound(na.begin(), na.end(), b);
      auto ib = std::upper_bound(nb.begin(), nb.end(), b);
      while (ia != na.end() && ib != nb.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return Triangle{a, b, *ia};
      }
    }
  }
  return std::nullopt;
}

std::uint64_t count_triangles(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex a = 0; a < g.n(); ++a) {
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
  std::vector<char> scratch(g.n(), 0);
  for (Vertex x1 = 0; x1 < g.n(); ++x1) {
    for (Vertex x2 = x1 + 1; x2 < g.n(); ++x2) {
      PairHit hit = pair_statistics(g, reverse, x1, x2, scratch);
      if (pair_qualifies(hit, g.n(), d)) return hit;
    }
  }
  return std::nullopt;
}

C4Best best_c4_edge(const Graph& g) {
  std::vector<std::uint32_t> mark(g.n(), 0);
  C4Best best;
  bool have = false;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      C4Best cand{u, v, c4_count(g, u, v, mark), std::uint64_t{g.degree(u)} + g.degree(v) - 2, true};
      if (cand.cycles) best.all_zero = false;
      if (!have || c4_better(cand, best)) {
        bool all_zero = best.all_zero;
        best = cand;
        best.all_zero = all_zero;
        have = true;
      }
    }
  }
  return best;
}

std::optional<std::uint64_t> first_success(std::uint64_t budget,
                                           const std::function<bool(std::uint64_t)>& accept) {
  for (std::uint64_t t = 0; t < budget; ++t)
    if (accept(t)) return t;
  return std::nullopt;
}

std::vector<std::int64_t> map_trials(std::uint64_t trials,
                                     const std::function<std::int64_t(std::uint64_t)>& f) {
  std::vector<std::int64_t> out(trials);
  for (std::uint64_t t = 0; t < trials; ++t) out[t] = f(t);
  return out;
}

}  // namespace serial
}  // namespace dibs::kernels
