#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xtr/bitstring.hpp"
#include "xtr/dist.hpp"
#include "xtr/error.hpp"
#include "xtr/extractor_fn.hpp"
#include "xtr/rational.hpp"

namespace xtr {

/// l x n Toeplitz matrices over GF(2). A function is named by the n+l-1 bits
/// h_0..h_{n+l-2} on its diagonals: entry (i, j) is h_{i + n - 1 - j}.
/// Collision probability of every distinct pair is exactly 2^-l.
class ToeplitzFamily {
 public:
  ToeplitzFamily(int input_bits, int output_bits);

  int input_bits() const { return n_; }
  int output_bits() const { return l_; }
  int description_bits() const { return n_ + l_ - 1; }

  /// T·x over GF(2).
  BitString eval(const BitString& h, const BitString& x) const;
  /// Same product on big-endian integer encodings (description_bits() <= 64).
  std::uint64_t eval_index(std::uint64_t h, std::uint64_t x) const;

 private:
  int n_, l_;
};

/// Pr_h[h(x1) = h(x2)] by enumerating every member of the family. Works for
/// any type with description_bits(), output_bits() and eval_index().
template <class Family>
Rational collision_prob(const Family& family, std::uint64_t x1, std::uint64_t x2) {
  if (x1 == x2) throw std::invalid_argument("collision_prob: needs a distinct pair");
  const int bits = family.description_bits();
  if (bits > 24) throw BudgetExceeded("collision_prob: family larger than 2^24");
  const std::uint64_t size = std::uint64_t{1} << bits;
  std::uint64_t hits = 0;
  for (std::uint64_t h = 0; h < size; ++h) hits += family.eval_index(h, x1) == family.eval_index(h, x2);
  return Rational(static_cast<std::int64_t>(hits), static_cast<std::int64_t>(size));
}

/// F(x, h) = h‖h(x): seed length d = n + l - 1, output length d + l.
BitString hash_extractor_eval(const ToeplitzFamily& family, const BitString& x, const BitString& h);
ExtractorFn hash_extractor_fn(const ToeplitzFamily& family);

/// Every distinct input pair against every family member.
struct CollisionSweep {
  std::uint64_t pairs = 0;
  std::uint64_t min_hits = 0;  ///< fewest colliding members over all pairs
  std::uint64_t max_hits = 0;
  std::uint64_t family_size = 0;
};

/// Bitsliced kernel: for each input, one bitset over the family per output
/// bit; a pair collides on the members where all l bitsets agree.
CollisionSweep collision_sweep(const ToeplitzFamily& family);
/// Reference: collision_prob on each pair in turn.
CollisionSweep collision_sweep_serial(const ToeplitzFamily& family);

/// Statistical distance of h‖h(X) from uniform for the flat source on
/// `support`, as the exact fraction l1_scaled / (2 K L |H|) where
/// l1_scaled = sum_h sum_z |L cnt_h(z) - K|.
struct FlatHashDistance {
  std::uint64_t l1_scaled = 0;
  std::uint64_t K = 0;
  std::uint64_t L = 0;
  std::uint64_t family_size = 0;

  double value() const {
    return static_cast<double>(l1_scaled) / (2.0 * static_cast<double>(K * L * family_size));
  }
  /// value <= (1/2) sqrt(L/K), compared exactly as l1^2 <= L^3 K |H|^2.
  bool within_leftover_bound() const;
};

FlatHashDistance flat_hash_distance(const ToeplitzFamily& family, const std::vector<std::uint64_t>& support);

/// Worst flat_hash_distance over all C(2^n, K) flat sources, by depth-first
/// enumeration with incremental per-member bucket counts.
struct FlatHashSweep {
  std::uint64_t sources = 0;
  std::uint64_t violations = 0;
  FlatHashDistance worst;
  std::vector<std::uint64_t> worst_support;
};

FlatHashSweep flat_hash_sweep(const ToeplitzFamily& family, std::uint64_t K,
                              std::uint64_t max_sources = std::uint64_t{1} << 26);

}  // namespace xtr
