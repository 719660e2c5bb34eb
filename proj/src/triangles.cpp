#include "dibs/triangles.hpp"

#include <algorithm>

#include "dibs/errors.hpp"
#include "dibs/kernels.hpp"

namespace dibs {

std::vector<Triangle> list_triangles(const Graph& g, const std::optional<VertexSet>& restrict) {
  std::vector<char> in;
  if (restrict) in = membership(g.n(), *restrict);
  auto allowed = [&](Vertex v) { return !restrict || in[v]; };

  std::vector<Triangle> out;
  for (Vertex a = 0; a < g.n(); ++a) {
    if (!allowed(a)) continue;
    auto na = g.neighbors(a);
    for (Vertex b : na) {
      if (b <= a || !allowed(b)) continue;
      auto nb = g.neighbors(b);
      // common neighbours c > b
      auto ia = std::upper_bound(na.begin(), na.end(), b);
      auto ib = std::upper_bound(nb.begin(), nb.end(), b);
      while (ia != na.end() && ib != nb.end()) {
        if (*ia < *ib) {
          ++ia;
        } else if (*ib < *ia) {
          ++ib;
        } else {
          if (allowed(*ia)) out.push_back({a, b, *ia});
          ++ia;
          ++ib;
        }
      }
    }
  }
  return out;
}

std::optional<Triangle> find_triangle(const Graph& g) { return kernels::omp::first_triangle(g); }

void require_triangle_free(const Graph& g) {
  if (auto t = find_triangle(g)) throw TriangleFound((*t)[0], (*t)[1], (*t)[2]);
}

namespace {

bool extend_clique(const Graph& g, VertexSet& clique, const VertexSet& candidates,
                   std::uint32_t t) {
  if (clique.size() == t) return true;
  if (clique.size() + candidates.size() < t) return false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Vertex v = candidates[i];
    VertexSet next;
    auto nv = g.neighbors(v);
    std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                          nv.begin(), nv.end(), std::back_inserter(next));
    clique.push_back(v);
    if (extend_clique(g, clique, next, t)) return true;
    clique.pop_back();
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_clique(const Graph& g, std::uint32_t t) {
  if (t == 0) return VertexSet{};
  VertexSet clique;
  VertexSet all = all_vertices(g.n());
  if (extend_clique(g, clique, all, t)) return clique;
  return std::nullopt;
}

}  // namespace dibs
