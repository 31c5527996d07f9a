#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

namespace xtr {

/// Small exact fraction used for error bounds and design budgets. All
/// pass/fail comparisons against eps or rho go through num/den integer
/// arithmetic.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  /// Accepts "p/q" or a plain integer.
  static Rational parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);
bool operator<(const Rational& a, const Rational& b);
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

}  // namespace xtr
