#pragma once

#include <cstdint>
#include <functional>

namespace xtr {

/// Integer-indexed evaluation map (n) x (d) -> (m). Strings are identified
/// with their big-endian values, so source x, seed y and output z are
/// indices into [2^n], [2^d], [2^m]. Desk-scale verifiers consume this form.
struct ExtractorFn {
  int n = 0;
  int d = 0;
  int m = 0;
  std::function<std::uint64_t(std::uint64_t x, std::uint64_t y)> eval;

  std::uint64_t sources() const { return std::uint64_t{1} << n; }
  std::uint64_t seeds() const { return std::uint64_t{1} << d; }
  std::uint64_t outputs() const { return std::uint64_t{1} << m; }

  /// First q output bits of this map.
  ExtractorFn truncated(int q) const;
};

}  // namespace xtr
