#include "xtr/ecc.hpp"

#include <bit>
#include <stdexcept>

#include "xtr/error.hpp"

namespace xtr {

Code::Code(int n, int t, Rational delta) : n_(n), t_(t), delta_(delta), field_(t) {
  if (n < 1) throw std::invalid_argument("code needs n >= 1");
}

std::vector<std::uint32_t> Code::pack(const BitString& x) const {
  if (x.size() != static_cast<std::size_t>(n_))
    throw DimensionError("message has " + std::to_string(x.size()) + " bits, code expects " + std::to_string(n_));
  std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(symbols()), 0);
  for (int j = 0; j < symbols(); ++j) {
    std::uint32_t v = 0;
    for (int b = j * t_; b < std::min(n_, (j + 1) * t_); ++b) v = (v << 1) | (x[static_cast<std::size_t>(b)] ? 1u : 0u);
    coeffs[static_cast<std::size_t>(j)] = v;
  }
  return coeffs;
}

std::vector<std::uint32_t> Code::evaluations(const BitString& x) const {
  const auto coeffs = pack(x);
  std::vector<std::uint32_t> evals(field_.size());
  for (std::uint32_t a = 0; a < field_.size(); ++a) evals[a] = field_.eval(coeffs, a);
  return evals;
}

bool Code::bit_at(const std::vector<std::uint32_t>& evals, int t, std::uint64_t pos) {
  const auto alpha = pos >> t;
  const auto z = static_cast<std::uint32_t>(pos & ((std::uint64_t{1} << t) - 1));
  return std::popcount(evals.at(alpha) & z) & 1;
}

namespace {

// Bits z = 0..63 of a Hadamard row for symbol s, restricted to z's low six bits.
std::uint64_t low_pattern(std::uint32_t s) {
  std::uint64_t w = 0;
  for (unsigned z = 0; z < 64; ++z)
    if (std::popcount(s & z & 63u) & 1) w |= std::uint64_t{1} << (63 - z);
  return w;
}

BitString codeword(const std::vector<std::uint32_t>& evals, int t) {
  const std::uint64_t row = std::uint64_t{1} << t;
  if (t >= 6) {
    std::vector<std::uint64_t> words(row * row / 64);
    for (std::uint64_t a = 0; a < row; ++a) {
      const std::uint32_t s = evals[a];
      const std::uint64_t low = low_pattern(s);
      for (std::uint64_t w = 0; w < row / 64; ++w) {
        const bool flip = std::popcount(s & static_cast<std::uint32_t>(w << 6)) & 1;
        words[a * (row / 64) + w] = flip ? ~low : low;
      }
    }
    return BitString::from_words(std::move(words), row * row);
  }
  BitString out(row * row);
  for (std::uint64_t pos = 0; pos < row * row; ++pos)
    if (Code::bit_at(evals, t, pos)) out.set(pos);
  return out;
}

void check_decode_budget(const Code& code, const BitString& center, Rational delta) {
  if (code.message_bits() > 14) throw BudgetExceeded("brute_list_decode: n above 14");
  if (code.log_length() > 24) throw BudgetExceeded("brute_list_decode: codeword above 2^24 bits");
  if (center.size() != code.length()) throw DimensionError("center length differs from codeword length");
  if (!(Rational(0) < delta) || !(delta < Rational(1, 2))) throw std::invalid_argument("delta must lie in (0, 1/2)");
}

// agreement * 2q >= (q + 2p) * length
bool within_radius(std::uint64_t agree, std::uint64_t length, Rational delta) {
  const auto lhs = static_cast<unsigned __int128>(agree) * 2 * static_cast<std::uint64_t>(delta.den);
  const auto rhs = static_cast<unsigned __int128>(length) * static_cast<std::uint64_t>(delta.den + 2 * delta.num);
  return lhs >= rhs;
}

}  // namespace

BitString Code::encode(const BitString& x) const {
  if (log_length() > 26) throw BudgetExceeded("encode: codeword above 2^26 bits; use bit_at");
  return codeword(evaluations(x), t_);
}

double Code::distance_bound() const {
  return 0.5 - static_cast<double>(symbols() - 1) / static_cast<double>(std::uint64_t{2} << t_);
}

Code build_code(int n, Rational delta) {
  if (n < 1) throw std::invalid_argument("build_code needs n >= 1");
  if (!(Rational(0) < delta) || !(delta < Rational(1, 2))) throw std::invalid_argument("delta must lie in (0, 1/2)");
  const auto p = static_cast<unsigned __int128>(delta.num);
  const auto q = static_cast<unsigned __int128>(delta.den);
  for (int t = 1; t <= 16; ++t) {
    const auto c = static_cast<unsigned __int128>((n + t - 1) / t);
    if ((static_cast<unsigned __int128>(1) << t) * 2 * p * p >= c * q * q) return Code(n, t, delta);
  }
  throw Infeasible("build_code: field exponent would exceed 16");
}

std::vector<BitString> brute_list_decode(const Code& code, const BitString& center, Rational delta) {
  check_decode_budget(code, center, delta);
  const int t = code.field_exponent();
  const std::uint64_t row = std::uint64_t{1} << t;
  // agree[alpha * 2^t + s]: agreement of the Hadamard row of s with block alpha of center.
  std::vector<std::uint32_t> agree(row * row);
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(row); ++a)
    for (std::uint32_t s = 0; s < row; ++s) {
      std::uint32_t c = 0;
      for (std::uint64_t z = 0; z < row; ++z)
        c += (std::popcount(s & static_cast<std::uint32_t>(z)) & 1) == center[static_cast<std::uint64_t>(a) * row + z];
      agree[static_cast<std::uint64_t>(a) * row + s] = c;
    }

  const int n = code.message_bits();
  const std::int64_t total = std::int64_t{1} << n;
  std::vector<char> hit(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t v = 0; v < total; ++v) {
    const auto evals = code.evaluations(BitString::from_uint(static_cast<std::uint64_t>(v), static_cast<std::size_t>(n)));
    std::uint64_t sum = 0;
    for (std::uint64_t a = 0; a < row; ++a) sum += agree[a * row + evals[a]];
    hit[static_cast<std::size_t>(v)] = within_radius(sum, code.length(), delta);
  }
  std::vector<BitString> out;
  for (std::int64_t v = 0; v < total; ++v)
    if (hit[static_cast<std::size_t>(v)]) out.push_back(BitString::from_uint(static_cast<std::uint64_t>(v), static_cast<std::size_t>(n)));
  return out;
}

std::vector<BitString> brute_list_decode_serial(const Code& code, const BitString& center, Rational delta) {
  check_decode_budget(code, center, delta);
  std::vector<BitString> out;
  const int n = code.message_bits();
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    const auto x = BitString::from_uint(v, static_cast<std::size_t>(n));
    const auto agree = code.length() - (code.encode(x) ^ center).popcount();
    if (within_radius(agree, code.length(), delta)) out.push_back(x);
  }
  return out;
}

}  // namespace xtr
