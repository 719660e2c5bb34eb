#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dibs/certificate.hpp"
#include "dibs/graph.hpp"

namespace dibs {

struct MixingSample {
  std::uint64_t a_size = 0, b_size = 0;
  std::uint64_t edges = 0;  // e(A, B)
  double deviation = 0.0;   // |e(A,B) - d|A||B|/n|
  double bound = 0.0;       // λ√(|A||B|) + tol
  bool pass = false;
};

struct SpectralReport {
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  bool regular = false;
  double lambda = 0.0;  // max |μ| over the spectrum with one copy of d removed
  double tol = 1e-6;
  std::string method;  // "dense" or "power"
  std::vector<MixingSample> mixing_samples;
};

/// Dense symmetric eigensolve for n <= 2048, power iteration on A² deflated
/// against the all-ones vector above that. Irregular graphs get
/// regular = false and no λ.
SpectralReport spectral_gap(const Graph& g);

/// Full adjacency spectrum, ascending (dense solver; small graphs).
std::vector<double> adjacency_spectrum(const Graph& g);

/// Expander-mixing check on `trials` random disjoint pairs (A, B), sizes
/// uniform in [1, max(1, n/3)]. Appends the samples to `report` and returns
/// whether all passed.
bool mixing_check(const Graph& g, SpectralReport& report, std::uint64_t trials, std::uint64_t seed);

/// One mixing sample for explicit sets.
MixingSample mixing_sample(const Graph& g, const SpectralReport& report, const VertexSet& a,
                           const VertexSet& b);

struct AlphaBounds {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool exact = false;
};

/// lower: greedy independent set; upper: exact for n <= 30, else
/// 2(nλ/d + 1) (floored) when a regular report is given, else n.
AlphaBounds alpha_bounds(const Graph& g, const std::optional<SpectralReport>& report = std::nullopt);

/// Exact independence number by branch and bound; n <= 64.
std::uint64_t independence_number(const Graph& g);

/// Greedy colouring over the degeneracy order, then the colour-class pair
/// spanning the most edges (isolated vertices of that pair dropped).
/// Guarantee ⌈m / C(k, 2)⌉ edges, recorded with the edge count in the trace.
BipartiteCert best_color_pair(const Graph& g);

/// Key/value text in the certificate style: `dibs-spectral 1` ... `end`.
void write_spectral_report(std::ostream& out, const SpectralReport& report);
SpectralReport read_spectral_report(std::istream& in);

}  // namespace dibs
