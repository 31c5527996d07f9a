#pragma once

#include <cstdint>
#include <vector>

namespace xtr {

/// Pinned irreducible polynomial for GF(2^t), t in [1, 16], including the
/// x^t term (e.g. 0x13 for t = 4).
std::uint32_t field_polynomial(int t);

/// GF(2^t) arithmetic through log/antilog tables over the pinned polynomial.
class GF2t {
 public:
  explicit GF2t(int t);

  int degree() const { return t_; }
  std::uint32_t size() const { return std::uint32_t{1} << t_; }
  std::uint32_t polynomial() const { return poly_; }

  static std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;

  /// Horner evaluation of sum_j coeffs[j] * x^j.
  std::uint32_t eval(const std::vector<std::uint32_t>& coeffs, std::uint32_t x) const;

 private:
  int t_;
  std::uint32_t poly_;
  std::vector<std::uint32_t> exp_;  // 2 * (size - 1) entries
  std::vector<std::uint32_t> log_;
};

/// Carry-less reference multiplication modulo `poly`.
std::uint32_t gf2_mul_slow(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int t);

}  // namespace xtr
