#include "dibs/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "dibs/coloring.hpp"
#include "dibs/degeneracy.hpp"
#include "dibs/errors.hpp"
#include "dibs/rng.hpp"

namespace dibs {

namespace {

constexpr Vertex kDenseLimit = 2048;

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    for (Vertex w : g.neighbors(v)) a(v, w) = 1.0;
  return a;
}

void multiply(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
  const std::int64_t n = g.n();
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < n; ++v) {
    double s = 0.0;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) s += x[w];
    y[v] = s;
  }
}

void remove_mean(std::vector<double>& x) {
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  for (double& v : x) v -= mean;
}

double norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

// largest |μ| on the complement of the all-ones vector, by power iteration on A²
double deflated_power(const Graph& g, double tol) {
  const Vertex n = g.n();
  std::vector<double> x(n), y(n), z(n);
  SplitMix64 rng(0x5eed);
  for (double& v : x) v = rng.unit() - 0.5;
  remove_mean(x);
  double nx = norm(x);
  for (double& v : x) v /= nx;
  double estimate = 0.0;
  for (int it = 0; it < 20000; ++it) {
    multiply(g, x, y);
    remove_mean(y);
    const double next = norm(y);  // ‖Ax‖ -> λ
    multiply(g, y, z);
    remove_mean(z);
    const double nz = norm(z);
    if (nz == 0.0) return 0.0;
    for (Vertex i = 0; i < n; ++i) x[i] = z[i] / nz;
    if (it > 10 && std::abs(next - estimate) < tol * 1e-3) return next;
    estimate = next;
  }
  return estimate;
}

}  // namespace

std::vector<double> adjacency_spectrum(const Graph& g) {
  if (g.n() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g),
                                                        Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

SpectralReport spectral_gap(const Graph& g) {
  SpectralReport r;
  r.n = g.n();
  r.regular = g.n() > 0 && g.is_regular();
  if (!r.regular) return r;
  r.d = g.degree(0);
  if (g.n() <= kDenseLimit) {
    auto ev = adjacency_spectrum(g);
    // drop one copy of the top eigenvalue d
    ev.pop_back();
    double lambda = 0.0;
    for (double mu : ev) lambda = std::max(lambda, std::abs(mu));
    r.lambda = lambda;
    r.method = "dense";
  } else {
    r.lambda = deflated_power(g, r.tol);
    r.method = "power";
  }
  return r;
}

MixingSample mixing_sample(const Graph& g, const SpectralReport& report, const VertexSet& a,
                           const VertexSet& b) {
  MixingSample s;
  s.a_size = a.size();
  s.b_size = b.size();
  s.edges = edges_between(g, a, b);
  const double ab = static_cast<double>(s.a_size) * static_cast<double>(s.b_size);
  const double expected = report.n ? static_cast<double>(report.d) * ab / static_cast<double>(report.n) : 0.0;
  s.deviation = std::abs(static_cast<double>(s.edges) - expected);
  s.bound = report.lambda * std::sqrt(ab) + report.tol;
  s.pass = s.deviation <= s.bound;
  return s;
}

bool mixing_check(const Graph& g, SpectralReport& report, std::uint64_t trials, std::uint64_t seed) {
  if (!report.regular)
    throw PreconditionError("irregular", "mixing check needs a regular graph's report");
  const Vertex n = g.n();
  const std::uint64_t cap = std::max<std::uint64_t>(1, n / 3);
  std::vector<MixingSample> samples(trials);
  const std::int64_t count = static_cast<std::int64_t>(trials);
#pragma omp parallel
  {
    std::vector<char> mark(n, 0);
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t t = 0; t < count; ++t) {
      SplitMix64 rng(substream(seed, static_cast<std::uint64_t>(t)));
      const std::uint64_t sa = std::min<std::uint64_t>(1 + rng.below(cap), n);
      const std::uint64_t sb = std::min<std::uint64_t>(1 + rng.below(cap), n - sa);
      VertexSet a, b;
      // 1 = in A, 2 = in B; redraw on collision
      while (a.size() < sa) {
        const Vertex v = static_cast<Vertex>(rng.below(n));
        if (!mark[v]) mark[v] = 1, a.push_back(v);
      }
      while (b.size() < sb) {
        const Vertex v = static_cast<Vertex>(rng.below(n));
        if (!mark[v]) mark[v] = 2, b.push_back(v);
      }
      for (Vertex v : a) mark[v] = 0;
      for (Vertex v : b) mark[v] = 0;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      samples[t] = mixing_sample(g, report, a, b);
    }
  }
  bool ok = true;
  for (auto& s : samples) {
    ok = ok && s.pass;
    report.mixing_samples.push_back(s);
  }
  return ok;
}

std::uint64_t independence_number(const Graph& g) {
  if (g.n() > 64) throw PreconditionError("too-large", "exact independence number needs n <= 64");
  const Vertex n = g.n();
  std::vector<std::uint64_t> nb(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) nb[v] |= std::uint64_t{1} << w;
  auto rec = [&](auto&& self, std::uint64_t mask, std::uint64_t have, std::uint64_t& best) -> void {
    if (!mask) {
      best = std::max(best, have);
      return;
    }
    if (have + std::popcount(mask) <= best) return;
    // branch on the vertex of largest degree inside mask
    Vertex pick = 0;
    int pick_deg = -1;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(m));
      const int deg = std::popcount(nb[v] & mask);
      if (deg > pick_deg) pick = v, pick_deg = deg;
    }
    const std::uint64_t bit = std::uint64_t{1} << pick;
    if (pick_deg == 0) {
      best = std::max<std::uint64_t>(best, have + std::popcount(mask));
      return;
    }
    self(self, mask & ~bit & ~nb[pick], have + 1, best);
    self(self, mask & ~bit, have, best);
  };
  std::uint64_t best = 0;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  rec(rec, all, 0, best);
  return best;
}

AlphaBounds alpha_bounds(const Graph& g, const std::optional<SpectralReport>& report) {
  AlphaBounds b;
  b.lower = turan_independent_set(g).size();
  if (g.n() <= 30) {
    b.upper = independence_number(g);
    b.exact = true;
  } else if (report && report->regular && report->d > 0) {
    const double bound = 2.0 * (static_cast<double>(report->n) * report->lambda /
                                    static_cast<double>(report->d) +
                                1.0);
    b.upper = std::min<std::uint64_t>(g.n(), static_cast<std::uint64_t>(std::floor(bound + 1e-9)));
  } else {
    b.upper = g.n();
  }
  return b;
}

BipartiteCert best_color_pair(const Graph& g) {
  if (g.m() == 0) throw PreconditionError("empty-graph", "colour-pair extraction needs an edge");
  const Coloring col = greedy_color(g, degeneracy_order(g));
  const std::uint32_t k = col.num_colors;
  std::vector<std::uint64_t> between(std::uint64_t{k} * k, 0);
  for (auto [u, v] : g.edges()) {
    const auto a = std::min(col.color[u], col.color[v]);
    const auto b = std::max(col.color[u], col.color[v]);
    ++between[std::uint64_t{a} * k + b];
  }
  std::uint32_t bi = 0, bj = 1;
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j)
      if (between[std::uint64_t{i} * k + j] > between[std::uint64_t{bi} * k + bj]) bi = i, bj = j;

  VertexSet side_a, side_b;
  for (Vertex v = 0; v < g.n(); ++v) {
    const auto c = col.color[v];
    if (c != bi && c != bj) continue;
    const auto other = c == bi ? bj : bi;
    bool touches = false;
    for (Vertex w : g.neighbors(v))
      if (col.color[w] == other) {
        touches = true;
        break;
      }
    if (touches) (c == bi ? side_a : side_b).push_back(v);
  }
  BipartiteCert cert = make_certificate(g, "color-pair", std::move(side_a), std::move(side_b));
  const std::uint64_t pairs = std::uint64_t{k} * (k - 1) / 2;
  cert.guarantee = 1;
  cert.trace.set("colors", k);
  cert.trace.set("class_a", bi);
  cert.trace.set("class_b", bj);
  cert.trace.set("edges", static_cast<std::int64_t>(between[std::uint64_t{bi} * k + bj]));
  cert.trace.set("edge_guarantee", static_cast<std::int64_t>((g.m() + pairs - 1) / pairs));
  return cert;
}

void write_spectral_report(std::ostream& out, const SpectralReport& r) {
  out << "dibs-spectral 1\n";
  out << "n " << r.n << "\n";
  out << "d " << r.d << "\n";
  out << "regular " << (r.regular ? 1 : 0) << "\n";
  out << std::setprecision(12) << "lambda " << r.lambda << "\n";
  out << "tol " << r.tol << "\n";
  out << "method " << (r.method.empty() ? "none" : r.method) << "\n";
  for (const auto& s : r.mixing_samples)
    out << "sample " << s.a_size << " " << s.b_size << " " << s.edges << " " << s.deviation << " "
        << s.bound << " " << (s.pass ? 1 : 0) << "\n";
  out << "end\n";
}

SpectralReport read_spectral_report(std::istream& in) {
  SpectralReport r;
  std::string line;
  std::uint64_t lineno = 0;
  auto fail = [&](const std::string& why) { throw InputError("spectral report: " + why, lineno); };
  if (!std::getline(in, line) || line != "dibs-spectral 1") fail("bad magic line");
  ++lineno;
  bool ended = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "end") {
      ended = true;
      break;
    }
    if (key == "n") ls >> r.n;
    else if (key == "d") ls >> r.d;
    else if (key == "regular") {
      int b = 0;
      ls >> b;
      r.regular = b != 0;
    } else if (key == "lambda") ls >> r.lambda;
    else if (key == "tol") ls >> r.tol;
    else if (key == "method") {
      ls >> r.method;
      if (r.method == "none") r.method.clear();
    } else if (key == "sample") {
      MixingSample s;
      int pass = 0;
      ls >> s.a_size >> s.b_size >> s.edges >> s.deviation >> s.bound >> pass;
      s.pass = pass != 0;
      r.mixing_samples.push_back(s);
    } else {
      fail("unknown key '" + key + "'");
    }
    if (ls.fail()) fail("malformed line '" + line + "'");
  }
  if (!ended) fail("missing end");
  return r;
}

}  // namespace dibs
