#include "dibs/degeneracy.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "dibs/errors.hpp"

namespace dibs {

VertexSet DegeneracyOrder::right_neighbors(const Graph& g, Vertex v) const {
  VertexSet out;
  for (Vertex w : g.neighbors(v))
    if (is_right_of(v, w)) out.push_back(w);
  return out;
}

DegeneracyOrder degeneracy_order(const Graph& g) {
  const Vertex n = g.n();
  DegeneracyOrder result;
  result.order.reserve(n);
  result.position.assign(n, 0);
  result.right_degree.assign(n, 0);

  std::vector<std::uint32_t> deg(n);
  std::vector<char> removed(n, 0);
  using Key = std::pair<std::uint32_t, Vertex>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    heap.emplace(deg[v], v);
  }
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (removed[v] || d != deg[v]) continue;
    removed[v] = 1;
    result.position[v] = static_cast<std::uint32_t>(result.order.size());
    result.order.push_back(v);
    result.right_degree[v] = d;
    result.degeneracy = std::max(result.degeneracy, d);
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w]) heap.emplace(--deg[w], w);
    }
  }
  return result;
}

namespace {

// Peels `alive` in place: repeatedly drops vertices for which `keep(deg)` is false.
template <class Keep>
VertexSet peel(const Graph& g, std::span<const Vertex> within, Keep keep) {
  std::vector<char> alive = membership(g.n(), within);
  std::vector<std::uint32_t> deg(g.n(), 0);
  std::vector<Vertex> stack;
  for (Vertex v : within) {
    std::uint32_t d = 0;
    for (Vertex w : g.neighbors(v)) d += alive[w];
    deg[v] = d;
  }
  for (Vertex v : within) {
    if (!keep(deg[v])) {
      alive[v] = 0;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (alive[w] && !keep(--deg[w])) {
        alive[w] = 0;
        stack.push_back(w);
      }
    }
  }
  VertexSet out;
  for (Vertex v : within)
    if (alive[v]) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VertexSet core_within(const Graph& g, std::span<const Vertex> within, std::uint32_t t) {
  return peel(g, within, [t](std::uint32_t d) { return d >= t; });
}

VertexSet core(const Graph& g, std::uint32_t t) {
  auto all = all_vertices(g.n());
  return core_within(g, all, t);
}

VertexSet half_avg_subgraph_within(const Graph& g, std::span<const Vertex> within) {
  const std::uint64_t m = induced_edge_count(g, within);
  const std::uint64_t n = within.size();
  if (m == 0) throw PreconditionError("empty-graph", "half_avg_subgraph needs at least one edge");
  // keep v iff deg(v) >= avg/2 = m/n  <=>  deg(v)·n >= m
  return peel(g, within, [m, n](std::uint32_t d) { return std::uint64_t{d} * n >= m; });
}

VertexSet half_avg_subgraph(const Graph& g) {
  auto all = all_vertices(g.n());
  return half_avg_subgraph_within(g, all);
}

VertexSet minimal_min_degree_subgraph(const Graph& g, std::uint32_t d) {
  VertexSet s = core(g, d);
  if (s.empty())
    throw PreconditionError("empty-core",
                            "graph has no induced subgraph of minimum degree " + std::to_string(d));
  // A vertex found critical in S stays critical in every subset of S that
  // contains it, so one ascending pass suffices.
  VertexSet trial;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!std::binary_search(s.begin(), s.end(), v)) continue;
    trial.clear();
    for (Vertex w : s)
      if (w != v) trial.push_back(w);
    VertexSet c = core_within(g, trial, d);
    if (!c.empty()) s = std::move(c);
  }
  return s;
}

std::uint32_t induced_min_degree(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) return 0;
  auto in = membership(g.n(), s);
  std::uint32_t best = ~std::uint32_t{0};
  for (Vertex v : s) {
    std::uint32_t d = 0;
    for (Vertex w : g.neighbors(v)) d += in[w];
    best = std::min(best, d);
  }
  return best;
}

}  // namespace dibs
