#include "dibs/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "dibs/certificate.hpp"
#include "dibs/degeneracy.hpp"
#include "dibs/dense_extractor.hpp"
#include "dibs/errors.hpp"
#include "dibs/generators.hpp"
#include "dibs/graph_io.hpp"
#include "dibs/sparse_extractor.hpp"
#include "dibs/spectral.hpp"

namespace dibs {

bool operator<(const ExperimentRow& a, const ExperimentRow& b) {
  return std::tie(a.n, a.d_or_m, a.model, a.seed, a.algo, a.guarantee, a.achieved, a.runtime_ms) <
         std::tie(b.n, b.d_or_m, b.model, b.seed, b.algo, b.guarantee, b.achieved, b.runtime_ms);
}

namespace {

struct Cell {
  Vertex n;
  std::uint64_t d;  // 0 for the f-curve
  std::string model;
  std::uint64_t seed;
};

void require_known(const std::vector<std::string>& models, std::initializer_list<const char*> known,
                   const char* kind) {
  for (const auto& m : models) {
    bool ok = false;
    std::string list;
    for (const char* k : known) {
      ok = ok || m == k;
      list += (list.empty() ? "" : ", ") + std::string(k);
    }
    if (!ok)
      throw PreconditionError("bad-model",
                              "unknown " + std::string(kind) + " model '" + m + "' (" + list + ")");
  }
}

std::string cell_stem(const Cell& c) {
  return c.model + "_n" + std::to_string(c.n) + "_d" + std::to_string(c.d) + "_s" +
         std::to_string(c.seed);
}

void save(const SweepParams& p, const Cell& c, const Graph& g, const BipartiteCert& cert) {
  if (!p.cert_dir) return;
  std::filesystem::create_directories(*p.cert_dir);
  const std::filesystem::path dir(*p.cert_dir);
  const auto graph_path = dir / (cell_stem(c) + ".el");
  if (!std::filesystem::exists(graph_path))
    write_graph_file(graph_path.string(), g, {"model " + c.model, "seed " + std::to_string(c.seed)});
  std::ofstream out(dir / (cell_stem(c) + "_" + cert.algorithm + ".cert"));
  write_certificate(out, cert);
}

// Runs `extract`, verifies the certificate and returns a row; nothing if the
// extractor's preconditions fail.
std::optional<std::pair<ExperimentRow, BipartiteCert>> timed(
    const SweepParams& p, const Cell& c, const Graph& g,
    const std::function<BipartiteCert()>& extract) {
  const auto start = std::chrono::steady_clock::now();
  BipartiteCert cert;
  try {
    cert = extract();
  } catch (const Error&) {
    return std::nullopt;
  }
  const auto stop = std::chrono::steady_clock::now();
  const VerificationReport rep = verify_bipartite_cert(g, cert);
  if (!rep.ok) throw std::logic_error("extractor produced an invalid certificate: " + rep.describe());
  ExperimentRow row;
  row.n = c.n;
  row.d_or_m = c.d;
  row.model = c.model;
  row.seed = c.seed;
  row.algo = cert.algorithm;
  row.guarantee = cert.guarantee;
  row.achieved = rep.achieved_min_degree;
  if (p.timing)
    row.runtime_ms =
        std::round(std::chrono::duration<double, std::milli>(stop - start).count() * 1000.0) / 1000.0;
  save(p, c, g, cert);
  return std::make_pair(row, cert);
}

template <class Job>
std::vector<ExperimentRow> run_cells(const std::vector<Cell>& cells, const SweepParams& p, Job job) {
  std::vector<std::vector<ExperimentRow>> out(cells.size());
  const std::int64_t count = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    if (p.stop && p.stop->load()) continue;
    out[i] = job(cells[i]);
  }
  std::vector<ExperimentRow> rows;
  for (auto& r : out) rows.insert(rows.end(), r.begin(), r.end());
  std::sort(rows.begin(), rows.end());
  return rows;
}

}  // namespace

std::optional<Graph> g_curve_instance(const std::string& model, Vertex n, std::uint64_t d,
                                      std::uint64_t seed) {
  if (model == "blowup") {
    std::optional<Vertex> best;
    for (Vertex np = 5; np <= n; np += 2)
      if (2 * std::uint64_t{n / np} >= d) best = np;
    if (!best) return std::nullopt;
    return blowup(cycle_graph(*best), equal_part_sizes(n, *best));
  }
  if (model == "alon-blowup") {
    std::optional<unsigned> best;
    for (unsigned k = 2; k <= 5 && (Vertex{1} << (3 * k)) <= n; ++k)
      if (std::uint64_t{n >> (3 * k)} * alon_degree(k) >= d) best = k;
    if (!best) return std::nullopt;
    const Vertex base = Vertex{1} << (3 * *best);
    return blowup(alon_graph(*best), equal_part_sizes(n, base));
  }
  if (model == "sparse-reg" || model == "process") {
    Graph g = model == "process" ? triangle_free_process(n, seed)
                                 : sparse_regular_construction(n, 0.04, seed);
    if (g.min_degree() < d) return std::nullopt;
    return g;
  }
  throw PreconditionError("bad-model", "unknown g-curve model '" + model +
                                           "' (blowup, alon-blowup, sparse-reg, process)");
}

std::optional<Graph> f_curve_instance(const std::string& model, Vertex n, std::uint64_t seed) {
  if (model == "cycle") return n >= 3 ? std::optional<Graph>(cycle_graph(n)) : std::nullopt;
  if (model == "blowup") {
    if (n < 5) return std::nullopt;
    return blowup(cycle_graph(5), equal_part_sizes(n, 5));
  }
  if (model == "process") return triangle_free_process(n, seed);
  if (model == "gnp-tf") return gnp_triangle_removed(n, 0.04, seed);
  if (model == "alon") {
    for (unsigned k = 2; k <= 5; ++k)
      if ((Vertex{1} << (3 * k)) == n) return alon_graph(k);
    return std::nullopt;
  }
  throw PreconditionError("bad-model", "unknown f-curve model '" + model +
                                           "' (cycle, blowup, process, gnp-tf, alon)");
}

std::vector<ExperimentRow> run_g_curve(const SweepParams& p) {
  std::vector<Cell> cells;
  for (Vertex n : p.ns)
    for (std::uint64_t d : p.ds)
      for (const auto& m : p.models)
        for (std::uint64_t s : p.seeds) cells.push_back({n, d, m, s});
  require_known(p.models, {"blowup", "alon-blowup", "sparse-reg", "process"}, "g-curve");

  return run_cells(cells, p, [&](const Cell& c) {
    std::vector<ExperimentRow> rows;
    std::optional<Graph> g;
    try {
      g = g_curve_instance(c.model, c.n, c.d, c.seed);
    } catch (const Error&) {
      return rows;
    }
    if (!g) return rows;
    auto add = [&](const std::function<BipartiteCert()>& f) {
      if (auto r = timed(p, c, *g, f)) rows.push_back(r->first);
    };
    add([&] { return extract_dense_pair(*g, c.d, PairMode::Exhaustive); });
    add([&] { return extract_dense_c4(*g); });
    if (c.d >= 16) add([&] { return extract_sparse(*g, c.d, c.seed); });
    if (!rows.empty()) {
      ExperimentRow best = rows.front();
      for (const auto& r : rows)
        if (r.achieved > best.achieved) best = r;
      best.algo = "best";
      best.guarantee = 0;
      for (const auto& r : rows) best.guarantee = std::max(best.guarantee, r.guarantee);
      best.runtime_ms = 0.0;
      rows.push_back(best);
    }
    return rows;
  });
}

std::vector<ExperimentRow> run_f_curve(const SweepParams& p) {
  std::vector<Cell> cells;
  for (Vertex n : p.ns)
    for (const auto& m : p.models)
      for (std::uint64_t s : p.seeds) cells.push_back({n, 0, m, s});
  require_known(p.models, {"cycle", "blowup", "process", "gnp-tf", "alon"}, "f-curve");

  return run_cells(cells, p, [&](const Cell& c0) {
    std::vector<ExperimentRow> rows;
    std::optional<Graph> g;
    try {
      g = f_curve_instance(c0.model, c0.n, c0.seed);
    } catch (const Error&) {
      return rows;
    }
    if (!g || g->m() == 0) return rows;
    Cell c = c0;
    c.d = g->m();
    auto add = [&](const std::function<BipartiteCert()>& f, bool color_pair) {
      auto r = timed(p, c, *g, f);
      if (!r) return;
      auto [row, cert] = *r;
      row.achieved = verify_bipartite_cert(*g, cert).edges_across;
      if (color_pair) {
        row.guarantee = static_cast<std::uint64_t>(*cert.trace.get("edge_guarantee"));
      } else {
        // every vertex has >= guarantee cross neighbours
        row.guarantee = (cert.guarantee * cert.size() + 1) / 2;
      }
      rows.push_back(row);
    };
    add([&] { return best_color_pair(*g); }, true);
    add([&] { return extract_dense_c4(*g); }, false);
    return rows;
  });
}

void write_csv(std::ostream& out, std::vector<ExperimentRow> rows) {
  std::sort(rows.begin(), rows.end());
  out << kCsvHeader << "\n";
  for (const auto& r : rows) {
    out << r.n << "," << r.d_or_m << "," << r.model << "," << r.seed << "," << r.algo << ","
        << r.guarantee << "," << r.achieved << "," << std::fixed << std::setprecision(3)
        << r.runtime_ms << "\n";
  }
  out.flush();
}

std::vector<ExperimentRow> read_csv(std::istream& in) {
  std::string line;
  std::uint64_t lineno = 1;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw InputError("CSV header must be '" + std::string(kCsvHeader) + "'", 0);
  std::vector<ExperimentRow> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != 8) throw InputError("CSV line " + std::to_string(lineno) + " needs 8 fields", lineno);
    try {
      ExperimentRow r;
      r.n = std::stoull(f[0]);
      r.d_or_m = std::stoull(f[1]);
      r.model = f[2];
      r.seed = std::stoull(f[3]);
      r.algo = f[4];
      r.guarantee = std::stoull(f[5]);
      r.achieved = std::stoull(f[6]);
      r.runtime_ms = std::stod(f[7]);
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw InputError("CSV line " + std::to_string(lineno) + " has a bad number", lineno);
    }
  }
  return rows;
}

}  // namespace dibs
