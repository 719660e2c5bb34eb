#include "dibs/binomial.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "dibs/errors.hpp"

namespace dibs {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(n!) - log(sqrt(2πn) (n/e)^n)
double stirlerr(double n) {
  constexpr double s0 = 1.0 / 12, s1 = 1.0 / 360, s2 = 1.0 / 1260, s3 = 1.0 / 1680,
                   s4 = 1.0 / 1188;
  if (n <= 15.0) {
    return std::lgamma(n + 1.0) - (n + 0.5) * std::log(n) + n -
           0.5 * std::log(2.0 * std::numbers::pi);
  }
  const double nn = n * n;
  if (n > 500) return (s0 - s1 / nn) / n;
  if (n > 80) return (s0 - (s1 - s2 / nn) / nn) / n;
  if (n > 35) return (s0 - (s1 - (s2 - s3 / nn) / nn) / nn) / n;
  return (s0 - (s1 - (s2 - (s3 - s4 / nn) / nn) / nn) / nn) / n;
}

// x log(x/np) + np - x, evaluated without cancellation near x = np
double bd0(double x, double np) {
  if (std::fabs(x - np) < 0.1 * (x + np)) {
    double v = (x - np) / (x + np);
    double s = (x - np) * v;
    double ej = 2 * x * v;
    v *= v;
    for (int j = 1; j < 1000; ++j) {
      ej *= v;
      double s1 = s + ej / (2 * j + 1);
      if (s1 == s) return s1;
      s = s1;
    }
    return s;
  }
  return x * std::log(x / np) + np - x;
}

}  // namespace

double log_binom_pmf(std::uint64_t n_, std::uint64_t k_, double p) {
  if (k_ > n_) return kNegInf;
  const double n = static_cast<double>(n_), x = static_cast<double>(k_);
  const double q = 1.0 - p;
  if (p <= 0.0) return k_ == 0 ? 0.0 : kNegInf;
  if (q <= 0.0) return k_ == n_ ? 0.0 : kNegInf;
  if (k_ == 0) {
    if (n_ == 0) return 0.0;
    return p < 0.1 ? -bd0(n, n * q) - n * p : n * std::log1p(-p);
  }
  if (k_ == n_) return q < 0.1 ? -bd0(n, n * p) - n * q : n * std::log(p);
  const double lc = stirlerr(n) - stirlerr(x) - stirlerr(n - x) - bd0(x, n * p) - bd0(n - x, n * q);
  const double lf = std::log(2.0 * std::numbers::pi) + std::log(x) + std::log1p(-x / n);
  return lc - 0.5 * lf;
}

double binom_tail(std::uint64_t n, double p, std::uint64_t l) {
  if (l == 0) return 1.0;
  if (l > n) return 0.0;
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  const double q = 1.0 - p;
  const double odds = p / q;
  constexpr double kStop = 1e-18;

  if (static_cast<double>(l) > static_cast<double>(n) * p) {
    // Upper tail: terms relative to pmf(l).
    const double base = log_binom_pmf(n, l, p);
    double term = 1.0, sum = 1.0;
    for (std::uint64_t k = l; k < n; ++k) {
      const double ratio = static_cast<double>(n - k) / static_cast<double>(k + 1) * odds;
      term *= ratio;
      sum += term;
      if (ratio < 1.0 && term < kStop * sum) break;
    }
    return std::exp(base + std::log(sum));
  }
  // Lower tail Pr[X <= l-1], terms relative to pmf(l-1), then complement.
  const double base = log_binom_pmf(n, l - 1, p);
  double term = 1.0, sum = 1.0;
  for (std::uint64_t k = l - 1; k > 0; --k) {
    const double ratio = static_cast<double>(k) / static_cast<double>(n - k + 1) / odds;
    term *= ratio;
    sum += term;
    if (ratio < 1.0 && term < kStop * sum) break;
  }
  return -std::expm1(base + std::log(sum));
}

std::uint32_t ell_of(std::uint64_t d) {
  if (d < 16)
    throw PreconditionError("degree-too-small",
                            "ell is defined for d >= 16 (ln ln d > 1), got d = " + std::to_string(d));
  const double ld = std::log(static_cast<double>(d));
  const double r = ld / std::log(ld);
  const double nearest = std::round(r);
  if (std::fabs(r - nearest) > 1e-9) return static_cast<std::uint32_t>(std::floor(r));
  using Big = boost::multiprecision::cpp_bin_float_100;
  const Big bd = boost::multiprecision::log(Big(d));
  const Big br = bd / boost::multiprecision::log(bd);
  return static_cast<std::uint32_t>(boost::multiprecision::floor(br));
}

}  // namespace dibs
