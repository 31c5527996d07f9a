#include "xtr/trevisan.hpp"

#include <stdexcept>

#include "xtr/error.hpp"

namespace xtr {

std::uint64_t restrict_seed(const BitString& y, const std::vector<std::uint32_t>& S) {
  if (S.size() > 64) throw DimensionError("restrict_seed: set larger than 64");
  std::uint64_t v = 0;
  for (auto s : S) {
    if (s >= y.size()) throw DimensionError("restrict_seed: index outside the seed");
    v = (v << 1) | (y[s] ? 1u : 0u);
  }
  return v;
}

BitString nw_generate(const std::function<bool(std::uint64_t)>& f, const DesignFamily& design, const BitString& y) {
  if (y.size() != static_cast<std::size_t>(design.universe()))
    throw DimensionError("seed has " + std::to_string(y.size()) + " bits, design universe is " +
                         std::to_string(design.universe()));
  BitString out(static_cast<std::size_t>(design.count()));
  for (int i = 0; i < design.count(); ++i)
    if (f(restrict_seed(y, design.set(i)))) out.set(static_cast<std::size_t>(i));
  return out;
}

BitString nw_generate(const BitString& f, const DesignFamily& design, const BitString& y) {
  if (design.set_size() >= 64 || f.size() != (std::uint64_t{1} << design.set_size()))
    throw DimensionError("truth table must have 2^l bits");
  return nw_generate([&f](std::uint64_t w) { return f[w]; }, design, y);
}

namespace {

// Least L with 2^L >= m / eps.
int ceil_log2_ratio(int m, Rational eps) {
  const auto a = static_cast<unsigned __int128>(m) * static_cast<std::uint64_t>(eps.den);
  const auto b = static_cast<unsigned __int128>(eps.num);
  int L = 0;
  while ((b << L) < a) ++L;
  return L;
}

TrevisanParams assemble(int n, int k, int m, Rational eps, Code code, bool strong) {
  auto design = greedy_weak_design(code.log_length(), m, Rational(1));
  const int L = ceil_log2_ratio(m, eps);
  const std::int64_t slack = std::int64_t{k} - 3 * L - design.universe() - 3;
  return TrevisanParams{n, k, m, eps, code.delta(), std::move(code), std::move(design), L, Rational(slack, m), strong};
}

void check_eps(Rational eps) {
  if (!(Rational(0) < eps) || !(eps < Rational(1))) throw std::invalid_argument("eps must lie in (0, 1)");
}

}  // namespace

TrevisanParams trevisan_build(int n, int k, int m, Rational eps, bool strong) {
  if (m < 1 || m > k || k > n) throw std::invalid_argument("trevisan_build needs 1 <= m <= k <= n");
  check_eps(eps);
  const Rational delta = eps * Rational(1, 4 * m);
  auto p = assemble(n, k, m, eps, build_code(n, delta), strong);
  if (p.rho_budget < Rational(1)) {
    const int d = p.design.universe();
    throw Infeasible("k - 3*log2(m/eps) - d - 3 >= m fails: " + std::to_string(k) + " - 3*" +
                     std::to_string(p.log_m_over_eps) + " - " + std::to_string(d) + " - 3 = " +
                     std::to_string(k - 3 * p.log_m_over_eps - d - 3) + " < " + std::to_string(m));
  }
  return p;
}

TrevisanParams trevisan_toy(int n, int t, int m, Rational eps, bool strong) {
  if (m < 1) throw std::invalid_argument("trevisan_toy needs m >= 1");
  check_eps(eps);
  return assemble(n, n, m, eps, Code(n, t, eps * Rational(1, 4 * m)), strong);
}

BitString trevisan_eval(const TrevisanParams& p, const BitString& x, const BitString& y) {
  if (x.size() != static_cast<std::size_t>(p.n))
    throw DimensionError("source has " + std::to_string(x.size()) + " bits, expected " + std::to_string(p.n));
  const auto evals = p.code.evaluations(x);
  const int t = p.code.field_exponent();
  auto out = nw_generate([&](std::uint64_t w) { return Code::bit_at(evals, t, w); }, p.design, y);
  return p.strong ? y + out : out;
}

ExtractorFn trevisan_fn(const TrevisanParams& p) {
  const int d = p.seed_bits();
  if (p.n + d > 30 || p.output_bits() > 62) throw BudgetExceeded("trevisan_fn: instance too large for integer form");
  ExtractorFn F;
  F.n = p.n;
  F.d = d;
  F.m = p.output_bits();
  F.eval = [p](std::uint64_t x, std::uint64_t y) {
    return trevisan_eval(p, BitString::from_uint(x, static_cast<std::size_t>(p.n)),
                         BitString::from_uint(y, static_cast<std::size_t>(p.seed_bits())))
        .to_uint();
  };
  return F;
}

}  // namespace xtr
