// dibs: generate instances, extract and verify induced bipartite certificates,
// run the sweep harnesses.
//
// exit codes: 0 ok, 1 verification failed, 2 parse / usage / range error,
// 3 precondition violated (reason and witness on stderr), 130 interrupted.

#include <CLI11.hpp>

#include <atomic>
#include <cmath>
#include <csignal>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "dibs/certificate.hpp"
#include "dibs/dense_extractor.hpp"
#include "dibs/errors.hpp"
#include "dibs/experiment.hpp"
#include "dibs/generators.hpp"
#include "dibs/graph_io.hpp"
#include "dibs/hfree_reduction.hpp"
#include "dibs/sparse_extractor.hpp"
#include "dibs/spectral.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted = true; }

template <class T>
std::vector<T> split_list(const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::istringstream is(item);
    T v{};
    if (!(is >> v) || !is.eof()) throw dibs::InputError("bad list item '" + item + "'", out.size());
    out.push_back(v);
  }
  return out;
}

void write_to(const std::string& path, const std::function<void(std::ostream&)>& f) {
  if (path.empty() || path == "-") {
    f(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw dibs::InputError("cannot open '" + path + "' for writing", 0);
  f(out);
  if (!out) throw dibs::InputError("write to '" + path + "' failed", 0);
}

void print_error(const dibs::Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  std::cerr << "reason: " << e.reason() << "\n";
  if (!e.witness().empty()) {
    std::cerr << "witness:";
    for (auto w : e.witness()) std::cerr << " " << w;
    std::cerr << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dense induced bipartite subgraphs in triangle-free graphs"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;

  // generate
  auto* gen = app.add_subcommand("generate", "build an instance and write it as an edge list");
  dibs::GeneratorParams gp;
  std::string gen_out, gen_sizes;
  gen->add_option("--model", gp.model, "blowup | gnp-tf | sparse-reg | process | alon")->required();
  gen->add_option("--n", gp.n, "number of vertices");
  gen->add_option("--k", gp.k, "alon field degree");
  gen->add_option("--c", gp.c, "edge density constant in (0, 1/20)");
  gen->add_option("--base", gp.base, "blowup base graph: cN, kN, pN, petersen");
  gen->add_option("--sizes", gen_sizes, "blowup sizes, one value or a comma list");
  gen->add_option("--seed", gp.seed, "seed")->envname("DIBS_SEED");
  gen->add_option("--out", gen_out, "output path (stdout if omitted)");

  // extract
  auto* ext = app.add_subcommand("extract", "extract a certified induced bipartite subgraph");
  std::string ext_graph, ext_algo = "auto", ext_out, ext_mode = "exhaustive";
  std::uint64_t ext_d = 0, ext_budget = 0;
  std::uint32_t ext_t = 3;
  ext->add_option("--graph", ext_graph, "edge-list file")->required();
  ext->add_option("--algo", ext_algo, "sparse | dense-pair | dense-c4 | reduce | auto | color-pair");
  ext->add_option("--d", ext_d, "degree parameter (default: minimum degree)");
  ext->add_option("--t", ext_t, "clique bound for reduce");
  ext->add_option("--seed", seed, "seed")->envname("DIBS_SEED");
  ext->add_option("--mode", ext_mode, "dense-pair search: exhaustive | sampled");
  ext->add_option("--budget", ext_budget, "retry budget (0 = default)");
  ext->add_option("--out", ext_out, "certificate path (stdout if omitted)");

  // verify
  auto* ver = app.add_subcommand("verify", "check a certificate against a graph");
  std::string ver_graph, ver_cert;
  ver->add_option("--graph", ver_graph, "edge-list file")->required();
  ver->add_option("--cert", ver_cert, "certificate file")->required();

  // experiment
  auto* exp = app.add_subcommand("experiment", "g-curve / f-curve sweep to CSV");
  std::string exp_kind, exp_n, exp_d, exp_models, exp_seeds = "1", exp_out, exp_certs;
  bool no_timing = false;
  exp->add_option("--kind", exp_kind, "g-curve | f-curve")->required();
  exp->add_option("--n", exp_n, "comma list of vertex counts");
  exp->add_option("--d", exp_d, "comma list of degrees (g-curve)");
  exp->add_option("--model", exp_models, "comma list of instance models");
  exp->add_option("--seeds", exp_seeds, "comma list of seeds")->envname("DIBS_SEED");
  exp->add_option("--out", exp_out, "CSV path (stdout if omitted)");
  exp->add_option("--cert-dir", exp_certs, "write each row's graph and certificate here");
  exp->add_flag("--no-timing", no_timing, "write runtime_ms = 0 (byte-stable output)");

  // spectral
  auto* spe = app.add_subcommand("spectral", "spectral gap, mixing check and alpha bounds");
  std::string spe_graph, spe_out;
  std::uint64_t spe_trials = 1000;
  spe->add_option("--graph", spe_graph, "edge-list file")->required();
  spe->add_option("--trials", spe_trials, "mixing samples");
  spe->add_option("--seed", seed, "seed")->envname("DIBS_SEED");
  spe->add_option("--out", spe_out, "report path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      if (!gen_sizes.empty()) gp.sizes = split_list<dibs::Vertex>(gen_sizes);
      const dibs::Graph g = dibs::generate(gp);
      const auto header = dibs::provenance_header(gp, g);
      write_to(gen_out, [&](std::ostream& o) { dibs::write_graph(o, g, header); });
      std::cerr << "generated n=" << g.n() << " m=" << g.m() << "\n";
      return 0;
    }

    if (*ext) {
      const dibs::Graph g = dibs::read_graph_file(ext_graph);
      const std::uint64_t d = ext_d ? ext_d : g.min_degree();
      std::string algo = ext_algo;
      if (algo == "auto") algo = d * d > g.n() ? "dense-pair" : "sparse";
      dibs::BipartiteCert cert;
      if (algo == "sparse") {
        cert = dibs::extract_sparse(g, d, seed, ext_budget ? ext_budget : 1000);
      } else if (algo == "dense-pair") {
        if (ext_mode != "exhaustive" && ext_mode != "sampled")
          throw dibs::InputError("--mode must be exhaustive or sampled", 0);
        cert = dibs::extract_dense_pair(
            g, d, ext_mode == "sampled" ? dibs::PairMode::Sampled : dibs::PairMode::Exhaustive, seed,
            ext_budget);
      } else if (algo == "dense-c4") {
        cert = dibs::extract_dense_c4(g);
      } else if (algo == "reduce") {
        dibs::ReductionOptions opt;
        if (ext_budget) opt.retry_budget = ext_budget;
        cert = dibs::reduce_extract(g, ext_t, d, seed, opt);
      } else if (algo == "color-pair") {
        cert = dibs::best_color_pair(g);
      } else {
        throw dibs::InputError("unknown --algo '" + ext_algo + "'", 0);
      }
      cert.trace.seed = seed;
      write_to(ext_out, [&](std::ostream& o) { dibs::write_certificate(o, cert); });
      const auto rep = dibs::verify_bipartite_cert(g, cert);
      std::cerr << cert.algorithm << ": " << rep.describe() << " guarantee=" << cert.guarantee
                << "\n";
      return rep.ok ? 0 : 1;
    }

    if (*ver) {
      const dibs::Graph g = dibs::read_graph_file(ver_graph);
      const dibs::BipartiteCert cert = dibs::read_certificate_file(ver_cert);
      dibs::VerificationReport rep;
      try {
        rep = dibs::verify_bipartite_cert(g, cert);
      } catch (const dibs::PreconditionError& e) {
        print_error(e);
        return 2;
      }
      std::cout << rep.describe() << "\n";
      return rep.ok ? 0 : 1;
    }

    if (*exp) {
      dibs::SweepParams p;
      p.ns = split_list<dibs::Vertex>(exp_n);
      p.ds = split_list<std::uint64_t>(exp_d);
      p.seeds = split_list<std::uint64_t>(exp_seeds);
      std::stringstream ms(exp_models);
      for (std::string m; std::getline(ms, m, ',');)
        if (!m.empty()) p.models.push_back(m);
      if (p.models.empty())
        p.models.push_back(exp_kind == "f-curve" ? std::string("cycle") : std::string("blowup"));
      p.timing = !no_timing;
      if (!exp_certs.empty()) p.cert_dir = exp_certs;
      p.stop = &g_interrupted;
      std::signal(SIGINT, on_sigint);
      std::vector<dibs::ExperimentRow> rows;
      if (exp_kind == "g-curve") rows = dibs::run_g_curve(p);
      else if (exp_kind == "f-curve") rows = dibs::run_f_curve(p);
      else throw dibs::InputError("--kind must be g-curve or f-curve", 0);
      write_to(exp_out, [&](std::ostream& o) { dibs::write_csv(o, rows); });
      if (g_interrupted) {
        std::cerr << "interrupted: wrote " << rows.size() << " rows\n";
        return 130;
      }
      return 0;
    }

    if (*spe) {
      const dibs::Graph g = dibs::read_graph_file(spe_graph);
      dibs::SpectralReport rep = dibs::spectral_gap(g);
      bool ok = true;
      if (rep.regular) ok = dibs::mixing_check(g, rep, spe_trials, seed);
      const auto alpha = dibs::alpha_bounds(g, rep);
      write_to(spe_out, [&](std::ostream& o) { dibs::write_spectral_report(o, rep); });
      std::cerr << "lambda=" << rep.lambda << " lambda/n^(1/3)="
                << rep.lambda / std::cbrt(static_cast<double>(std::max<std::uint64_t>(1, rep.n)))
                << " alpha in [" << alpha.lower << ", " << alpha.upper << "]"
                << (ok ? "" : " MIXING FAILED") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const dibs::InputError& e) {
    print_error(e);
    return 2;
  } catch (const dibs::PreconditionError& e) {
    print_error(e);
    return e.reason() == "range" ? 2 : 3;
  } catch (const dibs::Error& e) {
    print_error(e);
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
