#pragma once

#include <cstdint>
#include <vector>

#include "xtr/extractor_fn.hpp"
#include "xtr/graph.hpp"
#include "xtr/rational.hpp"

namespace xtr {

/// Limits for exhaustive enumeration. Exceeding one throws BudgetExceeded.
struct Budget {
  std::uint64_t max_subsets = std::uint64_t{1} << 20;
};

/// Bit lengths and quality target of an extractor (n, d, m, k, eps).
struct ExtractorSpec {
  int n = 0;
  int d = 0;
  int m = 0;
  int k = 0;
  Rational eps;

  void validate() const;
};

struct ExtractorVerdict {
  bool pass = true;
  /// On failure: the least failing right set B (ordered by its bitmask),
  /// the K left vertices with the most edges into it, and |E(A, B)|.
  std::vector<std::uint32_t> B;
  std::vector<std::uint32_t> A;
  std::uint64_t edges = 0;
};

struct DisperserVerdict {
  bool pass = true;
  /// On failure: K left vertices none of which has an edge into Y, |Y| = ceil(eps*M).
  std::vector<std::uint32_t> A;
  std::vector<std::uint32_t> Y;
};

struct PrefixVerdict {
  bool pass = true;
  int level = -1;  ///< first failing i (output prefix of length m - i)
  ExtractorVerdict detail;
};

struct WorstFlat {
  std::vector<std::uint32_t> A;
  /// value = l1_scaled / scale exactly, with l1_scaled = sum_z |M c_z - K D|
  /// and scale = 2 K D M.
  std::uint64_t l1_scaled = 0;
  std::uint64_t scale = 1;
  double value = 0;
};

// Extractor check in one-sided form: for every B ⊆ [M], the K left vertices
// with the most edges into B satisfy |E(A,B)| < K D (|B|/M + eps). All 2^M
// sets B are enumerated; M must satisfy 2^M <= budget.max_subsets.
ExtractorVerdict verify_extractor(const BipartiteGraph& G, std::uint64_t K, Rational eps,
                                  const Budget& budget = {});
ExtractorVerdict verify_extractor_serial(const BipartiteGraph& G, std::uint64_t K, Rational eps,
                                         const Budget& budget = {});

// Fails iff some Y of ceil(eps*M) right vertices is avoided by at least K
// left vertices. Enumerates all C(M, L) sets Y.
DisperserVerdict verify_disperser(const BipartiteGraph& G, std::uint64_t K, Rational eps,
                                  const Budget& budget = {});
DisperserVerdict verify_disperser_serial(const BipartiteGraph& G, std::uint64_t K, Rational eps,
                                         const Budget& budget = {});

/// Every output prefix of length m - i, i = 0..k, must be a (k - i, eps)
/// extractor. N and M must be powers of two and k <= m.
PrefixVerdict verify_prefix_extractor(const BipartiteGraph& G, int k, Rational eps,
                                      const Budget& budget = {});
PrefixVerdict verify_prefix_extractor(const ExtractorFn& F, const ExtractorSpec& spec,
                                      const Budget& budget = {});

/// Size-K left set whose induced output distribution is farthest from
/// uniform, by enumerating all C(N, K) sets. Ties go to the least set.
WorstFlat worst_flat_distance(const BipartiteGraph& G, std::uint64_t K, const Budget& budget = {});
WorstFlat worst_flat_distance_serial(const BipartiteGraph& G, std::uint64_t K,
                                     const Budget& budget = {});

/// Extractor verdict through whichever exhaustive route fits the budget:
/// all right sets B when 2^M fits, else all flat sources of size K, where
/// the pass condition is worst distance < eps.
bool certify_extractor(const BipartiteGraph& G, std::uint64_t K, Rational eps, const Budget& budget = {});

}  // namespace xtr
