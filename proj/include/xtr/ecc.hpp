#pragma once

#include <cstdint>
#include <vector>

#include "xtr/bitstring.hpp"
#include "xtr/gf2t.hpp"
#include "xtr/rational.hpp"

namespace xtr {

/// Reed-Solomon over GF(2^t) concatenated with the Hadamard code on t bits.
///
/// Message bits are cut into ceil(n/t) symbols of t bits (first bit most
/// significant; the last symbol is zero padded high) giving coefficients
/// c_0, c_1, ... of P. Codeword bit alpha * 2^t + z is <P(alpha), z> over
/// GF(2), for alpha, z in [0, 2^t).
class Code {
 public:
  Code(int n, int t, Rational delta = Rational(0));

  int message_bits() const { return n_; }
  int field_exponent() const { return t_; }
  int symbols() const { return (n_ + t_ - 1) / t_; }
  /// Codeword length 2^{2t}.
  std::uint64_t length() const { return std::uint64_t{1} << (2 * t_); }
  int log_length() const { return 2 * t_; }
  Rational delta() const { return delta_; }
  const GF2t& field() const { return field_; }

  std::vector<std::uint32_t> pack(const BitString& x) const;
  /// P(alpha) for every alpha in [0, 2^t).
  std::vector<std::uint32_t> evaluations(const BitString& x) const;
  /// Codeword bit `pos` given the outer evaluations of the message.
  static bool bit_at(const std::vector<std::uint32_t>& evals, int t, std::uint64_t pos);

  /// Full codeword; requires 2t <= 26.
  BitString encode(const BitString& x) const;

  /// Guaranteed relative distance 1/2 - (ceil(n/t) - 1) / 2^{t+1}.
  double distance_bound() const;

 private:
  int n_, t_;
  Rational delta_;
  GF2t field_;
};

/// Least t >= 1 with 2^t >= ceil(n/t) / (2 delta^2); needs 0 < delta < 1/2
/// and t <= 16.
Code build_code(int n, Rational delta);

/// Every message whose codeword agrees with `center` on at least
/// (1/2 + delta) * length positions, in increasing order. Needs n <= 14 and
/// 2t <= 24.
std::vector<BitString> brute_list_decode(const Code& code, const BitString& center, Rational delta);
std::vector<BitString> brute_list_decode_serial(const Code& code, const BitString& center, Rational delta);

}  // namespace xtr
