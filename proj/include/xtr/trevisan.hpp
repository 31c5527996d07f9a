#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "xtr/bitstring.hpp"
#include "xtr/design.hpp"
#include "xtr/ecc.hpp"
#include "xtr/extractor_fn.hpp"
#include "xtr/rational.hpp"

namespace xtr {

/// y|_S: bits of y at the sorted positions S, first position most
/// significant.
std::uint64_t restrict_seed(const BitString& y, const std::vector<std::uint32_t>& S);

/// Bit i is f(y|_{S_i}); f is a truth table of 2^l bits indexed by the
/// big-endian value of its argument.
BitString nw_generate(const BitString& f, const DesignFamily& design, const BitString& y);
BitString nw_generate(const std::function<bool(std::uint64_t)>& f, const DesignFamily& design, const BitString& y);

struct TrevisanParams {
  int n = 0, k = 0, m = 0;
  Rational eps, delta;
  Code code;
  DesignFamily design;
  int log_m_over_eps = 0;  ///< ceil(log2(m / eps)), exact on powers of two
  Rational rho_budget;     ///< (k - 3 log2(m/eps) - d - 3) / m
  bool strong = false;     ///< output y‖TR(x, y)

  int seed_bits() const { return design.universe(); }
  int output_bits() const { return m + (strong ? seed_bits() : 0); }
};

/// Code with delta = eps / 4m and a greedy weak (2t, 1) design with m
/// sets. Throws Infeasible when rho_budget < 1.
TrevisanParams trevisan_build(int n, int k, int m, Rational eps, bool strong = false);

/// Same structure over an explicit field exponent, skipping the
/// feasibility requirement (rho_budget is still computed with k = n).
TrevisanParams trevisan_toy(int n, int t, int m, Rational eps = Rational(1, 2), bool strong = false);

BitString trevisan_eval(const TrevisanParams& p, const BitString& x, const BitString& y);

/// Integer form for the graph verifiers; needs n + d <= 30 and output <= 62 bits.
ExtractorFn trevisan_fn(const TrevisanParams& p);

}  // namespace xtr
