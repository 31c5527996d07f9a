#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "xtr/bitstring.hpp"
#include "xtr/dist.hpp"
#include "xtr/extractor_fn.hpp"

namespace xtr {

/// Seeded map (n) x (d) -> (m) on bit strings. Sources shorter than n are
/// accepted: table-backed maps read them zero padded at the front, while
/// composed maps work on the short string directly.
struct SeededMap {
  int n = 0, d = 0, m = 0;
  std::function<BitString(const BitString& x, const BitString& y)> eval;

  BitString operator()(const BitString& x, const BitString& y) const;
};

/// Wraps an integer-indexed map; short sources are zero padded at the front.
SeededMap seeded_map(const ExtractorFn& F);
/// Integer view of a map taking full-length sources.
ExtractorFn to_fn(const SeededMap& F);
/// Uniformly random lookup table, reproducible from `seed`; n + d <= 24.
SeededMap random_table_map(int n, int d, int m, std::uint64_t seed);
SeededMap constant_map(int n, int d, const BitString& value);

/// F1 ∘ F2 (x1, x2, y) = F1(x1, F2(x2, y)) on (n1 + n2) x (d2) -> (m1).
SeededMap compose_serial(const SeededMap& F1, const SeededMap& F2);

struct BlockSource {
  int n1 = 0, n2 = 0;
  Dist joint;  ///< over n1 + n2 bits, X1 first
  double k1 = 0, k2 = 0;
};

struct BlockVerdict {
  bool pass = true;
  double marginal_entropy = 0;             ///< H_inf(X1)
  std::optional<std::uint64_t> bad_x1;     ///< first x1 whose conditional falls short
  double conditional_entropy = 0;          ///< H_inf(X2 | X1 = bad_x1) when set
};

/// Exact check of H_inf(X1) >= k1 and H_inf(X2 | X1 = x1) >= k2 for every
/// x1 of positive weight, each up to `tolerance` bits.
BlockVerdict check_block_source(const BlockSource& s, double tolerance = kDefaultTolerance);

/// Blocks Z_1..Z_b of k bits each plus selector Y in {0..b}, Y = 0 meaning
/// no block is promised. weights[z * (b + 1) + y] with z the big-endian
/// value of Z_1‖...‖Z_b.
class SomewhereRandomSource {
 public:
  SomewhereRandomSource(int b, int k, std::vector<double> weights, double tolerance = kDefaultTolerance);

  int blocks() const { return b_; }
  int block_bits() const { return k_; }
  const std::vector<double>& weights() const { return w_; }

  /// Marginal of Z_1‖...‖Z_b.
  Dist joint_blocks() const;
  double selector_prob(int y) const;
  /// stat_dist(Z_i | Y = i, U_k), i in [1, b]; 0 when Pr[Y = i] = 0.
  double block_distance(int i) const;
  /// Pr[Y = 0] <= eta and every block_distance(i) <= eps, up to tolerance.
  bool satisfies(double eps, double eta, double tolerance = kDefaultTolerance) const;

 private:
  int b_, k_;
  std::vector<double> w_;
};

/// b-block merger (k)^b x (d) -> (m).
struct Merger {
  int k = 0, blocks = 0, d = 0, m = 0;
  std::function<BitString(std::span<const BitString> z, const BitString& y)> eval;

  BitString operator()(std::span<const BitString> z, const BitString& y) const;
};

/// merger(z1, z2, y) = E(z1‖z2, y); needs E.n even.
Merger two_block_merger(const SeededMap& E);
/// Random table over the concatenated blocks.
Merger random_merger(int k, int blocks, int d, int m, std::uint64_t seed);

/// Two-block merger for each block length it is asked for.
using MergerFamily = std::function<Merger(int k)>;

/// Merges 2^levels blocks of k bits pairwise, level by level. The seed is
/// d_1‖...‖d_levels; the first round (blocks of k bits) uses d_levels.
Merger recursive_merger(const MergerFamily& family, int k, int levels);

struct ComposeTrace {
  std::vector<BitString> q, z;
};

/// E2 ⊙_M E1 on a source of length n' <= n: q_i = E1(a_[i,n'], r1),
/// z_i = E2(a_[1,i-1], q_i), result M(z_1..z_n', r2) with n - n' zero
/// blocks prepended. E1's output is cut to E2's seed length.
BitString merger_compose(const SeededMap& E1, const SeededMap& E2, const Merger& M, const BitString& a,
                         const BitString& r1, const BitString& r2, ComposeTrace* trace = nullptr);

/// The same composition packaged as a map with seed r1‖r2.
SeededMap merger_composition(const SeededMap& E1, const SeededMap& E2, const Merger& M);

struct DpTrace {
  /// rows[j][i] = value of the j+1 fold composition on x_[i+1, n].
  std::vector<std::vector<BitString>> rows;
};

/// E_t ⊙ ... ⊙ E_1 with mergers M_1..M_{t-1} by filling the matrix row by
/// row; returns the entry for the whole source.
BitString iterated_compose_dp(std::span<const SeededMap> E, std::span<const Merger> M, const BitString& x,
                              const BitString& y, std::span<const BitString> ys, DpTrace* trace = nullptr);

}  // namespace xtr
