#include "xtr/hashext.hpp"

#include <bit>
#include <functional>
#include <limits>

#include "xtr/combinatorics.hpp"

namespace xtr {

ToeplitzFamily::ToeplitzFamily(int input_bits, int output_bits) : n_(input_bits), l_(output_bits) {
  if (n_ < 1 || l_ < 1) throw std::invalid_argument("Toeplitz family needs n, l >= 1");
}

namespace {

BitString reversed(const BitString& x) {
  BitString r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) r.set(x.size() - 1 - i);
  return r;
}

std::uint64_t reverse_bits(std::uint64_t v, int width) {
  std::uint64_t r = 0;
  for (int i = 0; i < width; ++i, v >>= 1) r = (r << 1) | (v & 1u);
  return r;
}

}  // namespace

BitString ToeplitzFamily::eval(const BitString& h, const BitString& x) const {
  if (h.size() != static_cast<std::size_t>(description_bits()))
    throw DimensionError("hash index must have n + l - 1 = " + std::to_string(description_bits()) + " bits");
  if (x.size() != static_cast<std::size_t>(n_)) throw DimensionError("hash input must have n bits");
  // Row i dotted with x is the length-n window of h at i against x reversed.
  const BitString rx = reversed(x);
  BitString out(static_cast<std::size_t>(l_));
  for (int i = 0; i < l_; ++i)
    if ((h.substr(static_cast<std::size_t>(i), static_cast<std::size_t>(n_)) & rx).parity()) out.set(static_cast<std::size_t>(i));
  return out;
}

std::uint64_t ToeplitzFamily::eval_index(std::uint64_t h, std::uint64_t x) const {
  const int D = description_bits();
  const std::uint64_t rx = reverse_bits(x, n_);
  const std::uint64_t window = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  std::uint64_t out = 0;
  for (int i = 0; i < l_; ++i) {
    const std::uint64_t row = (h >> (D - i - n_)) & window;
    out = (out << 1) | static_cast<std::uint64_t>(std::popcount(row & rx) & 1);
  }
  return out;
}

BitString hash_extractor_eval(const ToeplitzFamily& family, const BitString& x, const BitString& h) {
  return h + family.eval(h, x);
}

ExtractorFn hash_extractor_fn(const ToeplitzFamily& family) {
  const int d = family.description_bits();
  const int l = family.output_bits();
  if (d + l > 63) throw BudgetExceeded("hash_extractor_fn: output wider than 63 bits");
  return {family.input_bits(), d, d + l,
          [family, l](std::uint64_t x, std::uint64_t h) { return (h << l) | family.eval_index(h, x); }};
}

namespace {

void check_sweep_budget(const ToeplitzFamily& family) {
  if (family.description_bits() > 16 || family.input_bits() > 16)
    throw BudgetExceeded("collision_sweep: family or input space above 2^16");
}

}  // namespace

CollisionSweep collision_sweep_serial(const ToeplitzFamily& family) {
  check_sweep_budget(family);
  const std::uint64_t inputs = std::uint64_t{1} << family.input_bits();
  const std::uint64_t size = std::uint64_t{1} << family.description_bits();
  CollisionSweep s;
  s.family_size = size;
  s.min_hits = std::numeric_limits<std::uint64_t>::max();
  for (std::uint64_t a = 0; a < inputs; ++a)
    for (std::uint64_t b = a + 1; b < inputs; ++b) {
      const Rational p = collision_prob(family, a, b);
      const auto hits = static_cast<std::uint64_t>(p.num) * (size / static_cast<std::uint64_t>(p.den));
      s.min_hits = std::min(s.min_hits, hits);
      s.max_hits = std::max(s.max_hits, hits);
      ++s.pairs;
    }
  if (!s.pairs) s.min_hits = 0;
  return s;
}

CollisionSweep collision_sweep(const ToeplitzFamily& family) {
  check_sweep_budget(family);
  const std::uint64_t inputs = std::uint64_t{1} << family.input_bits();
  const std::uint64_t size = std::uint64_t{1} << family.description_bits();
  const int l = family.output_bits();
  const std::size_t words = (size + 63) / 64;
  // slices[(x * l + b) * words + w]: bit h of output bit b of h(x).
  std::vector<std::uint64_t> slices(inputs * static_cast<std::size_t>(l) * words, 0);
  for (std::uint64_t x = 0; x < inputs; ++x)
    for (std::uint64_t h = 0; h < size; ++h) {
      const std::uint64_t v = family.eval_index(h, x);
      for (int b = 0; b < l; ++b)
        if ((v >> (l - 1 - b)) & 1u) slices[(x * l + static_cast<std::uint64_t>(b)) * words + h / 64] |= std::uint64_t{1} << (h % 64);
    }
  const std::uint64_t tail = size % 64 ? (std::uint64_t{1} << (size % 64)) - 1 : ~std::uint64_t{0};
  std::uint64_t lo = std::numeric_limits<std::uint64_t>::max(), hi = 0, pairs = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : lo) reduction(max : hi) reduction(+ : pairs)
  for (long ai = 0; ai < static_cast<long>(inputs); ++ai) {
    const auto a = static_cast<std::uint64_t>(ai);
    for (std::uint64_t b = a + 1; b < inputs; ++b) {
      std::uint64_t hits = 0;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t agree = w + 1 == words ? tail : ~std::uint64_t{0};
        for (int bit = 0; bit < l; ++bit)
          agree &= ~(slices[(a * l + static_cast<std::uint64_t>(bit)) * words + w] ^
                     slices[(b * l + static_cast<std::uint64_t>(bit)) * words + w]);
        hits += static_cast<std::uint64_t>(std::popcount(agree));
      }
      lo = std::min(lo, hits);
      hi = std::max(hi, hits);
      ++pairs;
    }
  }
  return {pairs, pairs ? lo : 0, hi, size};
}

bool FlatHashDistance::within_leftover_bound() const {
  using u128 = unsigned __int128;
  const u128 lhs = static_cast<u128>(l1_scaled) * l1_scaled;
  const u128 rhs = static_cast<u128>(L) * L * L * K * family_size * family_size;
  return lhs <= rhs;
}

FlatHashDistance flat_hash_distance(const ToeplitzFamily& family, const std::vector<std::uint64_t>& support) {
  if (family.description_bits() > 24) throw BudgetExceeded("flat_hash_distance: family larger than 2^24");
  const std::uint64_t size = std::uint64_t{1} << family.description_bits();
  const std::uint64_t L = std::uint64_t{1} << family.output_bits();
  const std::uint64_t K = support.size();
  if (!K) throw std::invalid_argument("flat_hash_distance: empty support");
  FlatHashDistance d{0, K, L, size};
  std::vector<std::uint64_t> cnt(L);
  for (std::uint64_t h = 0; h < size; ++h) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (auto x : support) ++cnt[family.eval_index(h, x)];
    for (auto c : cnt) d.l1_scaled += L * c > K ? L * c - K : K - L * c;
  }
  return d;
}

FlatHashSweep flat_hash_sweep(const ToeplitzFamily& family, std::uint64_t K, std::uint64_t max_sources) {
  const int n = family.input_bits();
  if (n > 16 || family.description_bits() > 20) throw BudgetExceeded("flat_hash_sweep: instance too large");
  const std::uint64_t inputs = std::uint64_t{1} << n;
  if (K == 0 || K > inputs) throw std::invalid_argument("flat_hash_sweep: need 1 <= K <= 2^n");
  const std::uint64_t total = binomial(inputs, K);
  if (total > max_sources)
    throw BudgetExceeded("flat_hash_sweep: C(2^" + std::to_string(n) + "," + std::to_string(K) + ") sources exceed budget");
  const std::uint64_t size = std::uint64_t{1} << family.description_bits();
  const std::uint64_t L = std::uint64_t{1} << family.output_bits();

  // table[x * size + h] = h(x)
  std::vector<std::uint32_t> table(inputs * size);
  for (std::uint64_t x = 0; x < inputs; ++x)
    for (std::uint64_t h = 0; h < size; ++h) table[x * size + h] = static_cast<std::uint32_t>(family.eval_index(h, x));

  FlatHashSweep sweep;
  sweep.worst = {0, K, L, size};
  std::vector<std::uint32_t> counts(size * L, 0);
  std::vector<std::uint64_t> chosen;
  std::function<void(std::uint64_t)> extend = [&](std::uint64_t from) {
    if (chosen.size() == K) {
      std::uint64_t l1 = 0;
      for (auto c : counts) l1 += L * c > K ? L * c - K : K - L * c;
      FlatHashDistance d{l1, K, L, size};
      ++sweep.sources;
      if (!d.within_leftover_bound()) ++sweep.violations;
      if (l1 > sweep.worst.l1_scaled) {
        sweep.worst = d;
        sweep.worst_support = chosen;
      }
      return;
    }
    const std::uint64_t need = K - chosen.size();
    for (std::uint64_t x = from; x + need <= inputs; ++x) {
      for (std::uint64_t h = 0; h < size; ++h) ++counts[h * L + table[x * size + h]];
      chosen.push_back(x);
      extend(x + 1);
      chosen.pop_back();
      for (std::uint64_t h = 0; h < size; ++h) --counts[h * L + table[x * size + h]];
    }
  };
  extend(0);
  return sweep;
}

}  // namespace xtr
