#include <doctest.h>

#include <cmath>

#include "dibs/binomial.hpp"
#include "dibs/errors.hpp"
#include "oracles.hpp"

using namespace dibs;

TEST_SUITE("binomial") {

TEST_CASE("small exact tail") {
  // Pr[Bin(4, 1/4) >= 2] = 67/256
  CHECK(binom_tail(4, 0.25, 2) == doctest::Approx(67.0 / 256.0).epsilon(1e-14));
  CHECK(binom_tail(10, 0.3, 0) == 1.0);
  CHECK(binom_tail(10, 0.3, 11) == 0.0);
  CHECK(binom_tail(10, 0.0, 1) == 0.0);
  CHECK(binom_tail(10, 1.0, 10) == doctest::Approx(1.0));
}

TEST_CASE("tail matches the high-precision sum") {
  SplitMix64 rng(31);
  for (int i = 0; i < 400; ++i) {
    const std::uint64_t n = 1 + rng.below(i < 300 ? 200 : 200000);
    const double p = std::pow(10.0, -4.0 * rng.unit());
    const std::uint64_t l = rng.below(n + 2);
    const double got = binom_tail(n, p, l);
    const double ref = oracle::binom_tail(n, p, l);
    if (ref < 1e-300) {
      CHECK(got < 1e-290);
      continue;
    }
    CHECK(std::abs(got - ref) <= 1e-11 * ref + 1e-300);
  }
}

TEST_CASE("log pmf sums to one") {
  for (std::uint64_t n : {1u, 7u, 100u, 5000u}) {
    for (double p : {0.01, 0.3, 0.5, 0.9}) {
      double s = 0;
      for (std::uint64_t k = 0; k <= n; ++k) s += std::exp(log_binom_pmf(n, k, p));
      CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  CHECK(std::isinf(log_binom_pmf(5, 1, 0.0)));
}

TEST_CASE("ell values") {
  CHECK(ell_of(16) == 2);
  CHECK(ell_of(100) == 3);
  CHECK(ell_of(10000) == 4);
  CHECK(ell_of(1000000) == 5);
  CHECK_THROWS_AS(ell_of(15), PreconditionError);
  // brute comparison in long double away from integer boundaries
  for (std::uint64_t d = 16; d < 200000; d += 997) {
    const long double q = std::log(static_cast<long double>(d)) /
                          std::log(std::log(static_cast<long double>(d)));
    CHECK(ell_of(d) == static_cast<std::uint32_t>(std::floor(q)));
  }
}

}  // TEST_SUITE
