#include "xtr/gf2t.hpp"

#include <array>
#include <stdexcept>

namespace xtr {

namespace {
constexpr std::array<std::uint32_t, 17> kPolys = {0,     0x3,    0x7,    0xB,    0x13,   0x25,
                                                  0x43,  0x83,   0x11D,  0x211,  0x409,  0x805,
                                                  0x1053, 0x201B, 0x4443, 0x8003, 0x1100B};
}

std::uint32_t field_polynomial(int t) {
  if (t < 1 || t > 16) throw std::out_of_range("field exponent must lie in [1, 16]");
  return kPolys[static_cast<std::size_t>(t)];
}

std::uint32_t gf2_mul_slow(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int t) {
  std::uint32_t r = 0;
  for (; b; b >>= 1) {
    if (b & 1u) r ^= a;
    a <<= 1;
    if (a >> t) a ^= poly;
  }
  return r;
}

GF2t::GF2t(int t) : t_(t), poly_(field_polynomial(t)) {
  const std::uint32_t order = size() - 1;
  if (order == 1) {  // GF(2)
    exp_ = {1, 1};
    log_ = {0, 0};
    return;
  }
  // Find a generator of the multiplicative group, then fill the tables.
  for (std::uint32_t g = 2; g < size(); ++g) {
    std::vector<std::uint32_t> exp(2 * order);
    std::vector<std::uint32_t> log(size(), 0);
    std::vector<char> seen(size(), 0);
    std::uint32_t v = 1;
    bool ok = true;
    for (std::uint32_t i = 0; i < order; ++i) {
      if (seen[v]) {
        ok = false;
        break;
      }
      seen[v] = 1;
      exp[i] = v;
      log[v] = i;
      v = gf2_mul_slow(v, g, poly_, t);
    }
    if (!ok) continue;
    for (std::uint32_t i = order; i < 2 * order; ++i) exp[i] = exp[i - order];
    exp_ = std::move(exp);
    log_ = std::move(log);
    return;
  }
  throw std::logic_error("no generator found for GF(2^t)");
}

std::uint32_t GF2t::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

std::uint32_t GF2t::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  const std::uint32_t order = size() - 1;
  return exp_[(order - log_[a]) % order];
}

std::uint32_t GF2t::eval(const std::vector<std::uint32_t>& coeffs, std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = mul(acc, x) ^ *it;
  return acc;
}

}  // namespace xtr
