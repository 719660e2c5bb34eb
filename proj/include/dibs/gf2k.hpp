#pragma once

#include <cstdint>

namespace dibs {

/// The binary field GF(2^k), elements as k-bit integers in the polynomial
/// basis, arithmetic carry-free modulo a fixed irreducible polynomial.
class GF2k {
 public:
  /// 2 <= k <= 8. Throws PreconditionError otherwise.
  explicit GF2k(unsigned k);

  unsigned k() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return 1u << k_; }
  /// Modulus including the x^k term, e.g. 0b1011 for x³ + x + 1.
  std::uint32_t modulus() const noexcept { return poly_; }

  static std::uint32_t add(std::uint32_t a, std::uint32_t b) noexcept { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

 private:
  unsigned k_;
  std::uint32_t poly_;
};

/// Carry-less product of two polynomials over GF(2) (no reduction).
std::uint64_t clmul(std::uint32_t a, std::uint32_t b) noexcept;

/// Whether the polynomial (bit i = coefficient of x^i) is irreducible over GF(2).
bool is_irreducible(std::uint32_t poly);

}  // namespace dibs
