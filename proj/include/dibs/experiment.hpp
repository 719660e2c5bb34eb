#pragma once

// Sweep harnesses behind `dibs experiment`. Each (n, d-or-m, model, seed)
// cell is an independent job; rows are sorted before they are written.

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dibs/graph.hpp"

namespace dibs {

struct ExperimentRow {
  std::uint64_t n = 0;
  std::uint64_t d_or_m = 0;
  std::string model;
  std::uint64_t seed = 0;
  std::string algo;
  std::uint64_t guarantee = 0;
  std::uint64_t achieved = 0;
  double runtime_ms = 0.0;

  friend bool operator<(const ExperimentRow& a, const ExperimentRow& b);
};

inline constexpr const char* kCsvHeader = "n,d_or_m,model,seed,algo,guarantee,achieved,runtime_ms";

struct SweepParams {
  std::vector<Vertex> ns;
  std::vector<std::uint64_t> ds;  // g-curve only
  std::vector<std::string> models;
  std::vector<std::uint64_t> seeds{1};
  bool timing = true;                     // false writes runtime_ms = 0
  std::optional<std::string> cert_dir;    // graph + certificate per row
  const std::atomic<bool>* stop = nullptr;  // checked before each cell
};

/// Triangle-free instance on n vertices with minimum degree >= d, or nothing
/// if the model cannot reach d at this n.
///   blowup       blowup of the odd cycle C_{n'} (largest odd n' >= 5 with 2⌊n/n'⌋ >= d)
///   alon-blowup  blowup of alon_graph(k), k largest with 2^{3k} <= n and ⌊n/2^{3k}⌋·deg >= d
///   sparse-reg   sparse_regular_construction(n, 0.04, seed), if its min degree is >= d
///   process      triangle_free_process(n, seed), if its min degree is >= d
std::optional<Graph> g_curve_instance(const std::string& model, Vertex n, std::uint64_t d,
                                      std::uint64_t seed);

/// Triangle-free instance for the edge harness: cycle (C_n), blowup (C5
/// blown up to n), process, gnp-tf (c = 0.04), alon (n must be 2^{3k}).
std::optional<Graph> f_curve_instance(const std::string& model, Vertex n, std::uint64_t seed);

/// One row per applicable extractor plus a `best` row per cell.
std::vector<ExperimentRow> run_g_curve(const SweepParams& params);

/// Rows for color-pair and dense-c4: guarantee and achieved are edge counts.
std::vector<ExperimentRow> run_f_curve(const SweepParams& params);

void write_csv(std::ostream& out, std::vector<ExperimentRow> rows);

/// Parses a CSV written by write_csv (header required). Throws InputError.
std::vector<ExperimentRow> read_csv(std::istream& in);

}  // namespace dibs
