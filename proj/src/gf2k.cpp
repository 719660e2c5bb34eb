#include "dibs/gf2k.hpp"

#include <bit>
#include <string>

#include "dibs/errors.hpp"

namespace dibs {

namespace {

// trinomial / pentanomial moduli, one per degree
constexpr std::uint32_t kModulus[] = {0, 0, 0b111, 0b1011, 0b10011, 0b100101, 0b1000011,
                                      0b10000011, 0b100011101};

int degree(std::uint64_t p) { return 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = degree(m);
  while (a && degree(a) >= dm) a ^= m << (degree(a) - dm);
  return a;
}

}  // namespace

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) noexcept {
  std::uint64_t r = 0;
  std::uint64_t x = a;
  while (b) {
    if (b & 1) r ^= x;
    x <<= 1;
    b >>= 1;
  }
  return r;
}

bool is_irreducible(std::uint32_t poly) {
  if (poly < 2) return false;
  const int n = degree(poly);
  // trial division by every polynomial of degree 1 .. n/2
  for (std::uint32_t q = 2; degree(q) <= n / 2; ++q)
    if (poly_mod(poly, q) == 0) return false;
  return true;
}

GF2k::GF2k(unsigned k) : k_(k), poly_(0) {
  if (k < 2 || k > 8)
    throw PreconditionError("bad-k", "field degree k must be in [2, 8], got " + std::to_string(k));
  poly_ = kModulus[k];
}

std::uint32_t GF2k::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  return static_cast<std::uint32_t>(poly_mod(clmul(a, b), poly_));
}

std::uint32_t GF2k::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace dibs
