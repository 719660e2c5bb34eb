#include "dibs/sparse_extractor.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <stdexcept>

#include "dibs/binomial.hpp"
#include "dibs/coloring.hpp"
#include "dibs/errors.hpp"
#include "dibs/kernels.hpp"
#include "dibs/rng.hpp"
#include "dibs/triangles.hpp"

namespace dibs {

namespace {

constexpr std::uint64_t kCoinX = 0;
constexpr std::uint64_t kCoinY = 1;

// p_u for every degree present in g.
struct PuTable {
  std::vector<double> by_vertex;
  bool clamped = false;
};

PuTable make_pu_table(const Graph& g, const SparseParams& params) {
  PuTable t;
  t.by_vertex.assign(g.n(), 0.0);
  std::map<std::uint64_t, double> cache;
  for (Vertex v = 0; v < g.n(); ++v) {
    const std::uint64_t deg = g.degree(v);
    if (deg < params.ell) continue;  // can never reach ℓ neighbours in X
    auto it = cache.find(deg);
    if (it == cache.end()) {
      bool clamped = false;
      it = cache.emplace(deg, p_u(deg, params, &clamped)).first;
      t.clamped |= clamped;
    }
    t.by_vertex[v] = it->second;
  }
  return t;
}

struct Draw {
  std::vector<char> in_x, in_y;
  VertexSet x, y;
  std::vector<std::uint32_t> x_right;  // |N⁺(x) ∩ X| for x ∈ X
};

Draw draw(const Graph& g, const DegeneracyOrder& order, const SparseParams& params,
          const PuTable& table, std::uint64_t seed) {
  Draw s;
  s.in_x.assign(g.n(), 0);
  s.in_y.assign(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (keyed_unit(seed, v, kCoinX) < params.p) {
      s.in_x[v] = 1;
      s.x.push_back(v);
    }
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (s.in_x[v]) continue;
    std::uint32_t hits = 0;
    for (Vertex w : g.neighbors(v)) hits += s.in_x[w];
    if (hits >= params.ell && keyed_unit(seed, v, kCoinY) < table.by_vertex[v]) {
      s.in_y[v] = 1;
      s.y.push_back(v);
    }
  }
  s.x_right.assign(g.n(), 0);
  for (Vertex x : s.x)
    for (Vertex w : g.neighbors(x))
      if (s.in_x[w] && order.is_right_of(x, w)) ++s.x_right[x];
  return s;
}

XYZCounts counts_of(const Graph& g, const Draw& s) {
  XYZCounts c;
  c.x = s.x.size();
  c.y = s.y.size();
  std::uint64_t twice = 0;
  for (Vertex y : s.y)
    for (Vertex w : g.neighbors(y)) twice += s.in_y[w];
  c.y_edges = twice / 2;
  for (Vertex x : s.x) {
    if (s.x_right[x] < 4) continue;
    for (Vertex w : g.neighbors(x)) c.z += s.in_y[w];
  }
  return c;
}

std::int64_t scaled(std::uint64_t x, std::uint64_t y, std::uint64_t ey, std::uint64_t z,
                    std::uint32_t ell) {
  const std::int64_t l = ell;
  return 3 * l * static_cast<std::int64_t>(y) - l * static_cast<std::int64_t>(x) -
         l * static_cast<std::int64_t>(ey) - 21 * static_cast<std::int64_t>(z);
}

XYZSample materialize(const Graph& g, const Draw& s, const PuTable& table, std::uint64_t seed) {
  XYZSample out;
  out.seed = seed;
  out.x = s.x;
  out.y = s.y;
  out.clamped = table.clamped;
  out.coin_log.assign(g.n(), 0.0);
  for (Vertex v = 0; v < g.n(); ++v)
    if (!s.in_x[v]) out.coin_log[v] = table.by_vertex[v];
  std::uint64_t twice = 0;
  for (Vertex y : s.y)
    for (Vertex w : g.neighbors(y)) twice += s.in_y[w];
  out.y_edges = twice / 2;
  for (Vertex x : s.x) {
    if (s.x_right[x] < 4) continue;
    for (Vertex w : g.neighbors(x))
      if (s.in_y[w]) out.z.emplace_back(x, w);
  }
  return out;
}

}  // namespace

SparseParams SparseParams::for_degree(std::uint64_t d, std::uint64_t retry_budget) {
  SparseParams params;
  params.ell = ell_of(d);  // throws for d < 16
  params.d = d;
  params.p = 1.0 / static_cast<double>(d);
  params.retry_budget = retry_budget;
  return params;
}

std::int64_t XYZSample::scaled_objective(std::uint32_t ell) const {
  return scaled(x.size(), y.size(), y_edges, z.size(), ell);
}

std::int64_t XYZCounts::scaled_objective(std::uint32_t ell) const {
  return scaled(x, y, y_edges, z, ell);
}

double p_u(std::uint64_t deg, const SparseParams& params, bool* clamped) {
  const double tail = binom_tail(deg, params.p, params.ell);
  if (!(tail > 0.0))
    throw PreconditionError("zero-tail", "Pr[Bin(" + std::to_string(deg) + ", p) >= " +
                                             std::to_string(params.ell) + "] is zero");
  const double value = params.p / ((1.0 - params.p) * tail);
  if (clamped) *clamped = value > 1.0;
  return std::min(value, 1.0);
}

XYZSample sample_xyz(const Graph& g, const DegeneracyOrder& order, const SparseParams& params,
                     std::uint64_t seed) {
  const PuTable table = make_pu_table(g, params);
  return materialize(g, draw(g, order, params, table, seed), table, seed);
}

XYZCounts sample_counts(const Graph& g, const DegeneracyOrder& order, const SparseParams& params,
                        std::uint64_t seed) {
  const PuTable table = make_pu_table(g, params);
  return counts_of(g, draw(g, order, params, table, seed));
}

XYZSample find_good_xyz(const Graph& g, const DegeneracyOrder& order, const SparseParams& params,
                        std::uint64_t seed, std::uint64_t* trials_used) {
  const PuTable table = make_pu_table(g, params);
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::min()};
  auto hit = kernels::omp::first_success(params.retry_budget, [&](std::uint64_t t) {
    const std::int64_t score =
        counts_of(g, draw(g, order, params, table, substream(seed, t))).scaled_objective(params.ell);
    std::int64_t cur = best.load();
    while (score > cur && !best.compare_exchange_weak(cur, score)) {
    }
    return score > 0;
  });
  if (!hit) {
    throw RetryExhausted("no accepted X/Y/Z sample in " + std::to_string(params.retry_budget) +
                             " trials (best objective " +
                             std::to_string(static_cast<double>(best.load()) / (3.0 * params.ell)) +
                             ")",
                         params.retry_budget,
                         static_cast<double>(best.load()) / (3.0 * params.ell));
  }
  if (trials_used) *trials_used = *hit + 1;
  const std::uint64_t s = substream(seed, *hit);
  return materialize(g, draw(g, order, params, table, s), table, s);
}

ClaimCheck check_claim(const Graph& g, const DegeneracyOrder& order, const XYZSample& s,
                       std::uint32_t ell) {
  ClaimCheck c;
  auto in_x = membership(g.n(), s.x);
  auto in_y = membership(g.n(), s.y);
  bool disjoint = true;
  for (Vertex y : s.y) disjoint &= !in_x[y];
  c.nonempty = !s.x.empty() && !s.y.empty() && disjoint;

  c.y_degree = true;
  for (Vertex y : s.y) {
    std::uint32_t hits = 0;
    for (Vertex w : g.neighbors(y)) hits += in_x[w];
    c.y_degree &= hits >= ell;
  }
  // Recount Z from scratch: edges x–y, x ∈ X with |N⁺(x) ∩ X| >= 4.
  std::uint64_t z = 0;
  for (Vertex x : s.x) {
    std::uint32_t right = 0;
    for (Vertex w : g.neighbors(x)) right += in_x[w] && order.is_right_of(x, w);
    if (right < 4) continue;
    for (Vertex w : g.neighbors(x)) z += in_y[w];
  }
  const std::uint64_t ey = induced_edge_count(g, s.y);
  c.z_small = 7 * z <= std::uint64_t{ell} * s.y.size();
  c.x_small = s.x.size() < 3 * s.y.size();
  c.y_sparse = ey < 3 * s.y.size();
  return c;
}

std::uint64_t sparse_guarantee(std::uint32_t ell) {
  return std::max<std::uint64_t>(1, (4 * std::uint64_t{ell} + 342) / 343);
}

BipartiteCert extract_sparse(const Graph& g, std::uint64_t d, std::uint64_t seed,
                             std::uint64_t retry_budget) {
  require_triangle_free(g);
  const SparseParams params = SparseParams::for_degree(d, retry_budget);

  const VertexSet base = minimal_min_degree_subgraph(g, static_cast<std::uint32_t>(d));
  const InducedSubgraph sub = induced_subgraph(g, base);
  const Graph& h = sub.graph;
  const DegeneracyOrder order = degeneracy_order(h);

  std::uint64_t trials = 0;
  const XYZSample sample = find_good_xyz(h, order, params, seed, &trials);
  if (!check_claim(h, order, sample, params.ell).all())
    throw std::logic_error("accepted X/Y/Z sample violates the claim properties");

  auto in_x = membership(h.n(), sample.x);
  VertexSet x0, x_rest;
  for (Vertex x : sample.x) {
    std::uint32_t right = 0;
    for (Vertex w : h.neighbors(x)) right += in_x[w] && order.is_right_of(x, w);
    (right >= 4 ? x0 : x_rest).push_back(x);
  }

  const InducedSubgraph rest = induced_subgraph(h, x_rest);
  const Coloring coloring = greedy_color(rest.graph, degeneracy_order(rest.graph));
  if (coloring.num_colors > 4) throw std::logic_error("X minus X0 needed more than 4 colours");
  std::vector<VertexSet> classes;
  for (const auto& cls : coloring.classes()) classes.push_back(rest.lift(cls));

  auto in_x0 = membership(h.n(), x0);
  VertexSet y0, y_rest;
  for (Vertex y : sample.y) {
    std::uint64_t into_x0 = 0;
    for (Vertex w : h.neighbors(y)) into_x0 += in_x0[w];
    (7 * into_x0 >= 3 * std::uint64_t{params.ell} ? y0 : y_rest).push_back(y);
  }
  const VertexSet y_prime = turan_independent_set_within(h, y_rest);

  // colour class maximizing 2e(X_i, Y') / (|X_i| + |Y'|)
  std::size_t best = 0;
  std::uint64_t best_edges = 0, best_den = 1;
  bool have = false;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::uint64_t e = edges_between(h, classes[i], y_prime);
    const std::uint64_t den = classes[i].size() + y_prime.size();
    using U = unsigned __int128;
    if (!have || U{2 * e} * best_den > U{2 * best_edges} * den) {
      best = i;
      best_edges = e;
      best_den = den;
      have = true;
    }
  }
  if (!have || best_edges == 0)
    throw std::logic_error("no colour class sends an edge to Y'");

  VertexSet union_set = classes[best];
  union_set.insert(union_set.end(), y_prime.begin(), y_prime.end());
  std::sort(union_set.begin(), union_set.end());
  const VertexSet kept = half_avg_subgraph_within(h, union_set);

  auto in_kept = membership(h.n(), kept);
  VertexSet side_a, side_b;
  for (Vertex v : classes[best])
    if (in_kept[v]) side_a.push_back(v);
  for (Vertex v : y_prime)
    if (in_kept[v]) side_b.push_back(v);

  BipartiteCert cert = make_certificate(g, "sparse", sub.lift(side_a), sub.lift(side_b));
  cert.guarantee = sparse_guarantee(params.ell);
  cert.trace.seed = seed;
  cert.trace.retries = trials - 1;
  cert.trace.retry_budget = retry_budget;
  auto& t = cert.trace;
  t.set("d", static_cast<std::int64_t>(d));
  t.set("ell", params.ell);
  t.set("minimal_n", base.size());
  t.set("sample_seed", static_cast<std::int64_t>(sample.seed));
  t.set("X", sample.x.size());
  t.set("Y", sample.y.size());
  t.set("Z", sample.z.size());
  t.set("eY", sample.y_edges);
  t.set("X0", x0.size());
  t.set("X_minus_X0", x_rest.size());
  t.set("colors", coloring.num_colors);
  t.set("Y0", y0.size());
  t.set("Y_prime", y_prime.size());
  t.set("class", best);
  t.set("class_size", classes[best].size());
  t.set("e_class_Yprime", best_edges);
  t.set("avg_num", 2 * best_edges);
  t.set("avg_den", best_den);
  t.note("log-base=natural");
  if (sample.clamped) t.note("p_u-clamped");
  if (cert.claimed_min_degree < cert.guarantee)
    throw std::logic_error("sparse certificate below its guarantee");
  return cert;
}

}  // namespace dibs
