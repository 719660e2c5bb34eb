#include "dibs/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dibs/errors.hpp"

namespace dibs {

Graph build_graph(Vertex n, std::span<const Edge> edges) {
  std::vector<Edge> directed;
  directed.reserve(2 * edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u >= n || v >= n) {
      throw InputError("edge " + std::to_string(i) + " (" + std::to_string(u) + "," +
                           std::to_string(v) + ") has an endpoint outside [0," +
                           std::to_string(n) + ")",
                       i);
    }
    if (u == v) {
      throw InputError("edge " + std::to_string(i) + " is a self-loop at " + std::to_string(u), i);
    }
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.n_ = n;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.adj_.resize(directed.size());
  for (std::size_t i = 0; i < directed.size(); ++i) {
    ++g.offsets_[directed[i].first + 1];
    g.adj_[i] = directed[i].second;
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.m_ = directed.size() / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint64_t Graph::edge_slot(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  return offsets_[u] + static_cast<std::uint64_t>(it - nb.begin());
}

std::uint32_t Graph::min_degree() const {
  std::uint32_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = (v == 0) ? degree(v) : std::min(best, degree(v));
  return best;
}

std::uint32_t Graph::max_degree() const {
  std::uint32_t best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::is_regular() const { return min_degree() == max_degree(); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

VertexSet InducedSubgraph::lift(std::span<const Vertex> local) const {
  VertexSet out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_parent[v]);
  std::sort(out.begin(), out.end());
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> local(g.n(), kAbsent);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      Vertex j = local[w];
      if (j != kAbsent && i < j) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  InducedSubgraph sub;
  sub.graph = build_graph(static_cast<Vertex>(vertices.size()), edges);
  sub.to_parent.assign(vertices.begin(), vertices.end());
  return sub;
}

std::vector<char> membership(Vertex n, std::span<const Vertex> vertices) {
  std::vector<char> mask(n, 0);
  for (Vertex v : vertices) mask[v] = 1;
  return mask;
}

std::uint64_t induced_edge_count(const Graph& g, std::span<const Vertex> vertices) {
  auto in = membership(g.n(), vertices);
  std::uint64_t twice = 0;
  for (Vertex v : vertices)
    for (Vertex w : g.neighbors(v)) twice += in[w];
  return twice / 2;
}

std::uint64_t edges_between(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  auto in_b = membership(g.n(), b);
  std::uint64_t count = 0;
  for (Vertex v : a)
    for (Vertex w : g.neighbors(v)) count += in_b[w];
  return count;
}

VertexSet all_vertices(Vertex n) {
  VertexSet out(n);
  std::iota(out.begin(), out.end(), Vertex{0});
  return out;
}

}  // namespace dibs
