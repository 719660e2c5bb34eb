#include "dibs/hfree_reduction.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "dibs/dense_extractor.hpp"
#include "dibs/errors.hpp"
#include "dibs/kernels.hpp"
#include "dibs/rng.hpp"
#include "dibs/sparse_extractor.hpp"
#include "dibs/triangles.hpp"

namespace dibs {

namespace {

using boost::multiprecision::cpp_int;

constexpr std::uint64_t kUTag = 2;

cpp_int pow6(std::uint64_t x) {
  cpp_int c = x;
  return c * c * c * c * c * c;
}

struct Level {
  const Graph& root;
  const ReductionOptions& options;
  ReductionResult& result;
  BipartiteCert terminal;
  ExtractionTrace levels;  // sample statistics per level
};

std::string level_key(std::size_t depth, const char* name) {
  return "L" + std::to_string(depth) + "_" + name;
}

void run(Level& ctx, const Graph& h, const VertexSet& to_root, std::uint32_t t, std::uint64_t d,
         std::uint64_t seed, std::size_t depth) {
  ReductionStep step;
  step.t = t;
  step.d = d;

  if (t == 3) {
    step.n = h.n();
    BipartiteCert local;
    if (d >= 16 || depth == 0) {
      local = extract_sparse(h, d, seed);
      step.branch = 's';
    } else if (ctx.options.allow_dense_fallback) {
      local = extract_dense_pair(h, d, PairMode::Exhaustive);
      step.branch = 'p';
    } else {
      throw PreconditionError("degree-too-small",
                              "degree " + std::to_string(d) + " < 16 at recursion depth " +
                                  std::to_string(depth) +
                                  "; the triangle-free extractor needs d >= 16, so start from "
                                  "d >= 16^6 = 16777216 per level or enable the dense fallback");
    }
    for (auto& v : local.side_a) v = to_root[v];
    for (auto& v : local.side_b) v = to_root[v];
    ctx.terminal = std::move(local);
    ctx.result.path.push_back(std::move(step));
    return;
  }

  const VertexSet s = minimal_min_degree_subgraph(h, static_cast<std::uint32_t>(d));
  const InducedSubgraph sub = induced_subgraph(h, s);
  const Graph& g = sub.graph;
  VertexSet sub_root(g.n());
  for (Vertex i = 0; i < g.n(); ++i) sub_root[i] = to_root[sub.to_parent[i]];
  step.n = g.n();
  const DegeneracyOrder order = degeneracy_order(g);
  const std::uint64_t next_d = sixth_root_ceil(d);

  for (Vertex v : order.order) {
    const VertexSet right = order.right_neighbors(g, v);
    if (!exceeds_seven_sixths(induced_edge_count(g, right), d)) continue;
    const VertexSet kept = half_avg_subgraph_within(g, right);
    if (induced_min_degree(g, kept) < next_d)
      throw std::logic_error("dense neighbourhood peeled below d^(1/6)");
    step.branch = 'b';
    step.v = sub_root[v];
    ctx.result.path.push_back(step);
    const InducedSubgraph next = induced_subgraph(g, kept);
    VertexSet next_root(next.graph.n());
    for (Vertex i = 0; i < next.graph.n(); ++i) next_root[i] = sub_root[next.to_parent[i]];
    run(ctx, next.graph, next_root, t - 1, next_d, mix64(seed ^ (depth + 1)), depth + 1);
    return;
  }

  const double p = std::pow(static_cast<double>(d), -2.0 / 3.0);
  std::atomic<bool> bad_sample{false};
  std::atomic<std::uint64_t> checked{0};
  auto accept = [&](std::uint64_t trial) {
    const USample smp = sample_u(g, order, p, substream(seed, trial));
    if (ctx.options.check_every_sample) {
      if (!list_triangles(g, smp.w).empty()) bad_sample = true;
      ++checked;
    }
    return !smp.w.empty() && exceeds_sixth_root(smp.w_edges, smp.w.size(), d);
  };
  const auto hit = kernels::omp::first_success(ctx.options.retry_budget, accept);
  if (bad_sample) throw std::logic_error("a sampled W contains a triangle");
  if (!hit)
    throw RetryExhausted("no sample U gave e(W) > d^(1/6)|W| in " +
                             std::to_string(ctx.options.retry_budget) + " trials",
                         ctx.options.retry_budget, 0.0);

  const USample smp = sample_u(g, order, p, substream(seed, *hit));
  if (!list_triangles(g, smp.w).empty()) throw std::logic_error("accepted W contains a triangle");
  const VertexSet c = core_within(g, smp.w, static_cast<std::uint32_t>(next_d));
  if (c.empty()) throw std::logic_error("accepted W has an empty ceil(d^(1/6))-core");

  step.branch = 'c';
  step.trials = *hit + 1;
  step.w_edges = smp.w_edges;
  step.samples_checked = checked;
  for (Vertex w : smp.w) step.w.push_back(sub_root[w]);
  std::sort(step.w.begin(), step.w.end());
  ctx.result.path.push_back(step);

  auto& trace = ctx.levels;
  trace.set(level_key(depth, "U"), static_cast<std::int64_t>(smp.u.size()));
  trace.set(level_key(depth, "X1"), static_cast<std::int64_t>(smp.x1));
  trace.set(level_key(depth, "X2"), static_cast<std::int64_t>(smp.x2));
  trace.set(level_key(depth, "X3"), static_cast<std::int64_t>(smp.x3));

  const InducedSubgraph next = induced_subgraph(g, c);
  VertexSet next_root(next.graph.n());
  for (Vertex i = 0; i < next.graph.n(); ++i) next_root[i] = sub_root[next.to_parent[i]];
  run(ctx, next.graph, next_root, 3, next_d, mix64(seed ^ (depth + 1)), depth + 1);
}

}  // namespace

std::uint64_t sixth_root_ceil(std::uint64_t d) {
  using U = unsigned __int128;
  auto p6 = [](std::uint64_t r) {
    U x = r;
    return x * x * x * x * x * x;
  };
  std::uint64_t r = static_cast<std::uint64_t>(std::pow(static_cast<double>(d), 1.0 / 6.0));
  while (r > 0 && p6(r - 1) >= d) --r;
  while (p6(r) < d) ++r;
  return r;
}

bool exceeds_seven_sixths(std::uint64_t edges, std::uint64_t d) {
  cpp_int d7 = pow6(d);
  d7 *= d;
  return pow6(edges) > d7;
}

bool exceeds_sixth_root(std::uint64_t edges, std::uint64_t w, std::uint64_t d) {
  return pow6(edges) > cpp_int(d) * pow6(w);
}

USample sample_u(const Graph& g, const DegeneracyOrder& order, double p, std::uint64_t seed) {
  USample s;
  for (Vertex v = 0; v < g.n(); ++v)
    if (keyed_unit(seed, v, kUTag) < p) s.u.push_back(v);
  s.x1 = induced_edge_count(g, s.u);
  const auto tris = list_triangles(g, s.u);
  s.x2 = tris.size();

  // leftmost vertex -> (triangle count, how many of them contain each other vertex)
  std::map<Vertex, std::pair<std::uint64_t, std::map<Vertex, std::uint64_t>>> lead;
  for (const auto& tri : tris) {
    Vertex a = tri[0];
    for (Vertex x : tri)
      if (order.position[x] < order.position[a]) a = x;
    auto& [count, with] = lead[a];
    ++count;
    for (Vertex x : tri)
      if (x != a) ++with[x];
  }

  auto in_u = membership(g.n(), s.u);
  // X₃ counts each qualifying edge once
  for (Vertex a : s.u) {
    for (Vertex b : g.neighbors(a)) {
      if (b <= a || !in_u[b]) continue;
      auto qualifies = [&](Vertex end, Vertex other) {
        auto it = lead.find(end);
        if (it == lead.end()) return false;
        auto jt = it->second.second.find(other);
        return jt == it->second.second.end() || jt->second < it->second.first;
      };
      if (qualifies(a, b) || qualifies(b, a)) ++s.x3;
    }
  }

  for (Vertex v : s.u)
    if (!lead.count(v)) s.w.push_back(v);
  s.w_edges = induced_edge_count(g, s.w);
  return s;
}

ReductionResult reduce_extract_full(const Graph& g, std::uint32_t t, std::uint64_t d,
                                    std::uint64_t seed, const ReductionOptions& options) {
  if (t < 3) throw PreconditionError("bad-t", "clique bound t must be at least 3");
  ReductionResult result;
  Level ctx{g, options, result, {}, {}};
  bool checked = false;
  if (t <= 5 && g.n() <= 200) {
    if (auto k = find_clique(g, t)) {
      std::vector<std::uint64_t> witness(k->begin(), k->end());
      throw PreconditionError("clique", "graph contains K_" + std::to_string(t), witness);
    }
    checked = true;
  }
  if (core(g, static_cast<std::uint32_t>(d)).empty())
    throw PreconditionError("empty-core",
                            "graph has no induced subgraph of minimum degree " + std::to_string(d));

  run(ctx, g, all_vertices(g.n()), t, d, seed, 0);

  BipartiteCert& term = ctx.terminal;
  BipartiteCert cert = make_certificate(g, "reduce", term.side_a, term.side_b);
  cert.guarantee = term.guarantee;
  cert.trace.seed = seed;
  cert.trace.retry_budget = options.retry_budget;
  std::uint64_t retries = 0;
  for (const auto& step : result.path)
    if (step.branch == 'c') retries += step.trials - 1;
  cert.trace.retries = retries;
  cert.trace.set("t", t);
  cert.trace.set("d", static_cast<std::int64_t>(d));
  for (std::size_t i = 0; i < result.path.size(); ++i) {
    const auto& step = result.path[i];
    cert.trace.set(level_key(i, "t"), step.t);
    cert.trace.set(level_key(i, "d"), static_cast<std::int64_t>(step.d));
    cert.trace.set(level_key(i, "n"), static_cast<std::int64_t>(step.n));
    if (step.branch == 'b') cert.trace.set(level_key(i, "v"), step.v);
    if (step.branch == 'c') {
      cert.trace.set(level_key(i, "trials"), static_cast<std::int64_t>(step.trials));
      cert.trace.set(level_key(i, "W"), static_cast<std::int64_t>(step.w.size()));
      cert.trace.set(level_key(i, "eW"), static_cast<std::int64_t>(step.w_edges));
    }
    std::string kind = step.branch == 'b'   ? "dense-neighbourhood"
                       : step.branch == 'c' ? "sampled-W"
                       : step.branch == 's' ? "sparse"
                                            : "dense-pair-fallback";
    cert.trace.note("level " + std::to_string(i) + " " + kind);
  }
  for (const auto& [name, value] : ctx.levels.stage_stats) cert.trace.set(name, value);
  for (const auto& [name, value] : term.trace.stage_stats) cert.trace.set("final_" + name, value);
  for (const auto& n : term.trace.notes) cert.trace.note("final " + n);
  cert.trace.note(checked ? "K_t-free checked" : "K_t-free assumed");
  result.cert = std::move(cert);
  return result;
}

BipartiteCert reduce_extract(const Graph& g, std::uint32_t t, std::uint64_t d, std::uint64_t seed,
                             const ReductionOptions& options) {
  return reduce_extract_full(g, t, d, seed, options).cert;
}

}  // namespace dibs
