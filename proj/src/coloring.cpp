#include "dibs/coloring.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace dibs {

std::vector<VertexSet> Coloring::classes() const {
  std::vector<VertexSet> out(num_colors);
  for (Vertex v = 0; v < color.size(); ++v) out[color[v]].push_back(v);
  return out;
}

Coloring greedy_color(const Graph& g, const DegeneracyOrder& order) {
  Coloring c;
  c.color.assign(g.n(), 0);
  std::vector<std::uint32_t> seen(order.degeneracy + 2, ~std::uint32_t{0});
  for (std::size_t i = order.order.size(); i-- > 0;) {
    const Vertex v = order.order[i];
    for (Vertex w : g.neighbors(v)) {
      if (order.is_right_of(v, w)) {
        std::uint32_t cw = c.color[w];
        if (cw < seen.size()) seen[cw] = v;
      }
    }
    std::uint32_t pick = 0;
    while (seen[pick] == v) ++pick;
    c.color[v] = pick;
    c.num_colors = std::max(c.num_colors, pick + 1);
  }
  return c;
}

VertexSet turan_independent_set_within(const Graph& g, std::span<const Vertex> within) {
  std::vector<char> alive = membership(g.n(), within);
  std::vector<std::uint32_t> deg(g.n(), 0);
  using Key = std::pair<std::uint32_t, Vertex>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
  for (Vertex v : within) {
    for (Vertex w : g.neighbors(v)) deg[v] += alive[w];
    heap.emplace(deg[v], v);
  }
  VertexSet chosen;
  auto remove = [&](Vertex v) {
    alive[v] = 0;
    for (Vertex w : g.neighbors(v))
      if (alive[w]) heap.emplace(--deg[w], w);
  };
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (!alive[v] || d != deg[v]) continue;
    chosen.push_back(v);
    alive[v] = 0;
    for (Vertex w : g.neighbors(v))
      if (alive[w]) remove(w);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

VertexSet turan_independent_set(const Graph& g) {
  auto all = all_vertices(g.n());
  return turan_independent_set_within(g, all);
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
  auto in = membership(g.n(), s);
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (in[w]) return false;
  return true;
}

bool is_proper(const Graph& g, const Coloring& c) {
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u))
      if (c.color[u] == c.color[v]) return false;
  return true;
}

}  // namespace dibs
