#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xtr/rational.hpp"

namespace xtr {

/// Sets S_0..S_{m-1}, each an l-subset of [d], stored sorted.
class DesignFamily {
 public:
  DesignFamily(int d, int l, std::vector<std::vector<std::uint32_t>> sets);

  int universe() const { return d_; }
  int set_size() const { return l_; }
  int count() const { return static_cast<int>(sets_.size()); }
  const std::vector<std::uint32_t>& set(int i) const { return sets_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::vector<std::uint32_t>>& sets() const { return sets_; }

  /// First `count` sets over the same universe.
  DesignFamily prefix(int count) const;

  friend bool operator==(const DesignFamily&, const DesignFamily&) = default;

 private:
  int d_, l_;
  std::vector<std::vector<std::uint32_t>> sets_;
};

enum class DesignKind { design, weak, uniform_weak };

std::string to_string(DesignKind kind);

struct DesignVerdict {
  bool pass = true;
  int j = -1;  ///< first violating set (0-based)
  int i = -1;  ///< partner set for DesignKind::design
};

/// Exact integer check of
///   design        2^{|S_i ∩ S_j|} <= rho for all i != j
///   weak          sum_{i<j} 2^{|S_i ∩ S_j|} <= rho (m - 1) for every j
///   uniform_weak  sum_{i<j} 2^{|S_i ∩ S_j|} <= rho j        (j 0-based)
DesignVerdict verify_design(const DesignFamily& family, DesignKind kind, Rational rho);

/// Deterministic weak (l, rho) design.
///
/// Sets are built in phases over disjoint blocks of the universe. Inside a
/// phase each set takes one element from each of l blocks of width
/// ceil(l / ln 2), chosen block by block to minimise the running potential
/// sum_i 2^{|S_i ∩ chosen|} over earlier sets of the phase (ties to the
/// smaller element). A set whose full weak-design sum would exceed
/// rho (m - 1) opens a new phase instead, where it meets every earlier set
/// trivially. Unused elements are squeezed out of the universe at the end.
/// Needs rho >= 1.
DesignFamily greedy_weak_design(int l, int m, Rational rho = Rational(1));

}  // namespace xtr
