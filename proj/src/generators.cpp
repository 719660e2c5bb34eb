#include "dibs/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dibs/degeneracy.hpp"
#include "dibs/errors.hpp"
#include "dibs/gf2k.hpp"
#include "dibs/rng.hpp"
#include "dibs/triangles.hpp"

namespace dibs {

Graph empty_graph(Vertex n) { return build_graph(n, std::span<const Edge>{}); }

Graph path_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return build_graph(n, e);
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw PreconditionError("bad-size", "a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return build_graph(n, e);
}

Graph complete_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return build_graph(n, e);
}

Graph complete_bipartite(Vertex a, Vertex b) { return complete_multipartite({a, b}); }

Graph complete_multipartite(const std::vector<Vertex>& sizes) {
  std::vector<Vertex> part;
  for (Vertex i = 0; i < sizes.size(); ++i) part.insert(part.end(), sizes[i], i);
  const Vertex n = static_cast<Vertex>(part.size());
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part[u] != part[v]) e.emplace_back(u, v);
  return build_graph(n, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    e.emplace_back(i, 5 + i);
  }
  return build_graph(10, e);
}

Graph named_graph(const std::string& name) {
  if (name == "petersen") return petersen_graph();
  if (name.size() >= 2) {
    const char kind = name[0];
    Vertex n = 0;
    std::istringstream in(name.substr(1));
    if (in >> n && in.eof()) {
      if (kind == 'c' || kind == 'C') return cycle_graph(n);
      if (kind == 'k' || kind == 'K') return complete_graph(n);
      if (kind == 'p' || kind == 'P') return path_graph(n);
    }
  }
  throw PreconditionError("bad-base", "unknown base graph '" + name +
                                          "' (use cN, kN, pN or petersen)");
}

std::vector<Vertex> blowup_owner(const std::vector<Vertex>& sizes) {
  std::vector<Vertex> owner;
  for (Vertex v = 0; v < sizes.size(); ++v) owner.insert(owner.end(), sizes[v], v);
  return owner;
}

Graph blowup(const Graph& g, const std::vector<Vertex>& sizes) {
  if (sizes.size() != g.n())
    throw PreconditionError("bad-size", "blowup needs one size per vertex (" +
                                            std::to_string(g.n()) + "), got " +
                                            std::to_string(sizes.size()));
  std::vector<std::uint64_t> start(g.n() + 1, 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (sizes[v] == 0)
      throw PreconditionError("bad-size", "blowup size of vertex " + std::to_string(v) + " is 0",
                              {v});
    start[v + 1] = start[v] + sizes[v];
  }
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    for (std::uint64_t a = start[u]; a < start[u + 1]; ++a)
      for (std::uint64_t b = start[v]; b < start[v + 1]; ++b)
        e.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  return build_graph(static_cast<Vertex>(start[g.n()]), e);
}

std::vector<Vertex> equal_part_sizes(Vertex n, Vertex parts) {
  if (parts == 0) throw PreconditionError("bad-size", "need at least one part");
  std::vector<Vertex> sizes(parts, n / parts);
  for (Vertex i = 0; i < n % parts; ++i) ++sizes[i];
  return sizes;
}

Graph gnp(Vertex n, double p, std::uint64_t seed) {
  std::vector<Edge> e;
  if (n < 2 || p <= 0.0) return empty_graph(n);
  SplitMix64 rng(seed);
  if (p >= 1.0) return complete_graph(n);
  const double log_q = std::log1p(-p);
  // walk the pairs (u, v), u < v, row by row, jumping over geometric gaps
  std::uint64_t u = 0, v = 0;
  for (;;) {
    const double r = 1.0 - rng.unit();  // (0, 1]
    std::uint64_t skip = static_cast<std::uint64_t>(std::floor(std::log(r) / log_q));
    v += 1 + skip;
    while (u < n && v >= n) {
      v = v - n + u + 2;
      ++u;
    }
    if (u + 1 >= n) break;
    e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return build_graph(n, e);
}

std::vector<std::array<Vertex, 3>> greedy_triangle_family(const Graph& g) {
  std::vector<char> used(g.offsets().back(), 0);
  auto slot = [&](Vertex a, Vertex b) { return g.edge_slot(std::min(a, b), std::max(a, b)); };
  std::vector<std::array<Vertex, 3>> family;
  for (const Triangle& t : list_triangles(g)) {
    const auto s0 = slot(t[0], t[1]), s1 = slot(t[0], t[2]), s2 = slot(t[1], t[2]);
    if (used[s0] || used[s1] || used[s2]) continue;
    used[s0] = used[s1] = used[s2] = 1;
    family.push_back(t);
  }
  return family;
}

Graph gnp_triangle_removed(Vertex n, double c, std::uint64_t seed, TriangleRemovalStats* stats) {
  if (!(c > 0.0 && c < 0.05))
    throw PreconditionError("bad-c", "c must lie in (0, 1/20)");
  if (n < 100) throw PreconditionError("bad-size", "gnp-tf needs n >= 100");
  const double p = c / std::sqrt(static_cast<double>(n));
  const Graph g = gnp(n, p, seed);
  const auto family = greedy_triangle_family(g);
  std::vector<Edge> removed;
  for (const auto& t : family) {
    removed.emplace_back(t[0], t[1]);
    removed.emplace_back(t[0], t[2]);
    removed.emplace_back(t[1], t[2]);
  }
  std::sort(removed.begin(), removed.end());
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!std::binary_search(removed.begin(), removed.end(), e)) kept.push_back(e);
  if (stats) {
    stats->sampled_edges = g.m();
    stats->family_size = family.size();
  }
  return build_graph(n, kept);
}

Graph sparse_regular_construction(Vertex n, double c, std::uint64_t seed) {
  const Graph h = gnp_triangle_removed(n, c, seed);
  const double p = c / std::sqrt(static_cast<double>(n));
  // remove degree <= pn/30, i.e. keep degree >= ⌊pn/30⌋ + 1
  const auto t = static_cast<std::uint32_t>(std::floor(p * n / 30.0)) + 1;
  const VertexSet keep = core(h, t);
  if (keep.empty())
    throw PreconditionError("empty-peel", "peeling at pn/30 emptied the graph (seed " +
                                              std::to_string(seed) + "); try another seed or larger n",
                            {seed});
  return induced_subgraph(h, keep).graph;
}

Graph triangle_free_process(Vertex n, std::uint64_t seed) {
  if (n == 0) return empty_graph(0);
  std::vector<Edge> pairs;
  pairs.reserve(std::uint64_t{n} * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  SplitMix64 rng(seed);
  for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng.below(i)]);

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<VertexSet> nb(n);
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) {
    const VertexSet& small = nb[u].size() < nb[v].size() ? nb[u] : nb[v];
    const Vertex other = nb[u].size() < nb[v].size() ? v : u;
    bool closes = false;
    for (Vertex w : small)
      if (adj[other][w]) {
        closes = true;
        break;
      }
    if (closes) continue;
    adj[u][v] = adj[v][u] = 1;
    nb[u].push_back(v);
    nb[v].push_back(u);
    edges.emplace_back(u, v);
  }
  return build_graph(n, edges);
}

std::uint64_t alon_degree(unsigned k) {
  return (std::uint64_t{1} << (2 * k - 2)) - (std::uint64_t{1} << (k - 1));
}

std::vector<std::uint32_t> alon_generators(unsigned k) {
  if (k < 2 || k > 5) throw PreconditionError("bad-k", "alon graph needs 2 <= k <= 5");
  const GF2k f(k);
  const std::uint32_t top = 1u << (k - 1);
  // Split GF(2^k)* by the top bit of w⁷. When 7 divides 2^k - 1 (3 | k) the
  // map w -> w⁷ is not a bijection, so split by the top bit of w itself.
  const bool seventh = (k % 3) != 0;
  std::vector<std::uint32_t> w0, w1;
  for (std::uint32_t w = 1; w < f.size(); ++w) {
    const std::uint32_t key = seventh ? f.pow(w, 7) : w;
    (key & top ? w1 : w0).push_back(w);
  }
  auto u = [&](std::uint32_t w) {
    return w | (f.pow(w, 3) << k) | (f.pow(w, 5) << (2 * k));
  };
  std::vector<std::uint32_t> gens;
  for (auto a : w0)
    for (auto b : w1) gens.push_back(u(a) ^ u(b));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.size() != alon_degree(k))
    throw std::logic_error("alon generator sums are not distinct");
  return gens;
}

Graph alon_graph(unsigned k) {
  const auto gens = alon_generators(k);
  const std::uint32_t n = 1u << (3 * k);
  std::vector<Edge> e;
  e.reserve(std::uint64_t{n} * gens.size() / 2);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t s : gens)
      if (x < (x ^ s)) e.emplace_back(x, x ^ s);
  return build_graph(n, e);
}

Graph generate(const GeneratorParams& params) {
  const auto& m = params.model;
  if (m == "blowup") {
    const Graph base = named_graph(params.base.empty() ? "c5" : params.base);
    std::vector<Vertex> sizes = params.sizes;
    if (sizes.size() == 1) sizes.assign(base.n(), sizes[0]);
    if (sizes.empty()) sizes.assign(base.n(), 1);
    return blowup(base, sizes);
  }
  if (m == "gnp-tf") return gnp_triangle_removed(params.n, params.c, params.seed);
  if (m == "sparse-reg") return sparse_regular_construction(params.n, params.c, params.seed);
  if (m == "process") return triangle_free_process(params.n, params.seed);
  if (m == "alon") return alon_graph(params.k);
  throw PreconditionError("bad-model",
                          "unknown model '" + m + "' (blowup, gnp-tf, sparse-reg, process, alon)");
}

std::vector<std::string> provenance_header(const GeneratorParams& params, const Graph& g) {
  std::vector<std::string> lines;
  lines.push_back("model " + params.model);
  if (params.model == "blowup") {
    lines.push_back("base " + (params.base.empty() ? std::string("c5") : params.base));
    std::string s = "sizes";
    for (Vertex v : params.sizes) s += " " + std::to_string(v);
    lines.push_back(s);
  } else if (params.model == "alon") {
    lines.push_back("k " + std::to_string(params.k));
  } else {
    lines.push_back("n " + std::to_string(params.n));
    if (params.model != "process") {
      std::ostringstream c;
      c << "c " << params.c;
      lines.push_back(c.str());
    }
  }
  if (params.model != "blowup" && params.model != "alon") {
    lines.push_back("seed " + std::to_string(params.seed));
    lines.push_back(std::string("rng ") + kRngName);
  }
  lines.push_back("vertices " + std::to_string(g.n()));
  if (g.n() && g.is_regular()) lines.push_back("d " + std::to_string(g.degree(0)));
  else lines.push_back("min_degree " + std::to_string(g.min_degree()));
  return lines;
}

}  // namespace dibs
