#pragma once

#include <cstdint>

namespace dibs {

/// log Pr[Bin(n, p) = k] via Loader's saddle-point expansion (accurate to a
/// few ulps even for n in the millions). -inf when the mass is zero.
double log_binom_pmf(std::uint64_t n, std::uint64_t k, double p);

/// Pr[Bin(n, p) >= l] with relative error around 1e-13. Sums whichever tail
/// is short and decaying: the upper tail directly when l > np, otherwise
/// 1 - Pr[Bin(n, p) <= l - 1].
double binom_tail(std::uint64_t n, double p, std::uint64_t l);

/// ⌊ln d / ln ln d⌋ for d >= 16. Near-integer quotients are re-resolved in
/// 100-digit arithmetic. Throws PreconditionError for d < 16.
std::uint32_t ell_of(std::uint64_t d);

}  // namespace dibs
