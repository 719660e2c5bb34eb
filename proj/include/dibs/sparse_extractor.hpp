#pragma once

// Randomized extractor for the sparse regime: sample X (rate p = 1/d) and Y
// (vertices with >= ℓ neighbours in X, thinned by a per-vertex coin p_y so that
// Pr[y ∈ Y] = p), accept a sample once
//     |Y| - |X|/3 - e(Y)/3 - (7/ℓ)|Z| > 0,
// then shave X₀ / Y₀, 4-colour X∖X₀, take a Turán independent set Y' and the
// best colour class X_i, and peel G[X_i ∪ Y'] to half its average degree.

#include <cstdint>
#include <vector>

#include "dibs/certificate.hpp"
#include "dibs/degeneracy.hpp"
#include "dibs/graph.hpp"

namespace dibs {

struct SparseParams {
  std::uint64_t d = 16;
  double p = 1.0 / 16;  // inclusion probability, 1/d
  std::uint32_t ell = 2;  // ⌊ln d / ln ln d⌋
  std::uint64_t retry_budget = 1000;

  /// Derives p = 1/d and ℓ = ell_of(d). Throws for d < 16.
  static SparseParams for_degree(std::uint64_t d, std::uint64_t retry_budget = 1000);
};

struct XYZSample {
  std::uint64_t seed = 0;
  VertexSet x, y;
  std::vector<Edge> z;         // (x, y) with x ∈ X₀, y ∈ Y
  std::vector<double> coin_log;  // p_u per vertex (0 where unused)
  std::uint64_t y_edges = 0;   // e(G[Y])
  bool clamped = false;        // some p_u exceeded 1 and was clamped

  /// 3ℓ · (|Y| - |X|/3 - e(Y)/3 - (7/ℓ)|Z|), an exact integer.
  std::int64_t scaled_objective(std::uint32_t ell) const;
  bool accepted(std::uint32_t ell) const { return scaled_objective(ell) > 0; }
};

/// Thinning probability p / ((1-p)·Pr[Bin(deg, p) >= ℓ]) clamped to 1.
/// `clamped` (optional) reports whether clamping happened. Throws
/// PreconditionError when the tail is zero (deg < ℓ).
double p_u(std::uint64_t deg, const SparseParams& params, bool* clamped = nullptr);

/// One draw of (X, Y, Z). X-membership of v depends only on (seed, v), and
/// so does v's Y-coin.
XYZSample sample_xyz(const Graph& g, const DegeneracyOrder& order, const SparseParams& params,
                     std::uint64_t seed);

/// Statistics needed by find_good_xyz and the Monte Carlo harness without
/// materialising Z.
struct XYZCounts {
  std::uint64_t x = 0, y = 0, y_edges = 0, z = 0;
  std::int64_t scaled_objective(std::uint32_t ell) const;
};
XYZCounts sample_counts(const Graph& g, const DegeneracyOrder& order, const SparseParams& params,
                        std::uint64_t seed);

/// Tries seeds substream(seed, 0), substream(seed, 1), ... and returns the
/// first accepted sample; the trace's retry count is the index of that trial.
/// Throws RetryExhausted (best scaled objective as its score) otherwise.
XYZSample find_good_xyz(const Graph& g, const DegeneracyOrder& order, const SparseParams& params,
                        std::uint64_t seed, std::uint64_t* trials_used = nullptr);

/// Claim properties of an accepted sample, checked literally.
struct ClaimCheck {
  bool nonempty = false;        // X, Y nonempty and disjoint
  bool y_degree = false;        // (i) every y ∈ Y has >= ℓ neighbours in X
  bool z_small = false;         // (ii) |Z| <= (ℓ/7)|Y|
  bool x_small = false;         // (iii) |X| < 3|Y|
  bool y_sparse = false;        // (iv) e(Y) < 3|Y|
  bool all() const { return nonempty && y_degree && z_small && x_small && y_sparse; }
};
ClaimCheck check_claim(const Graph& g, const DegeneracyOrder& order, const XYZSample& s,
                       std::uint32_t ell);

/// Full pipeline on g (triangle-free, d-core nonempty, d >= 16). Works on the
/// vertex-minimal min-degree-d subgraph; the certificate is in g's labels and
/// its trace records |X|, |Y|, |Z|, e(Y), |X₀|, |Y₀|, |Y'|, the chosen class and
/// the stage-(7) average degree as a rational (avg_num / avg_den).
BipartiteCert extract_sparse(const Graph& g, std::uint64_t d, std::uint64_t seed,
                             std::uint64_t retry_budget = 1000);

/// max(1, ⌈(4/343)·ℓ⌉)
std::uint64_t sparse_guarantee(std::uint32_t ell);

}  // namespace dibs
