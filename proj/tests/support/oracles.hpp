#pragma once

// Test-side oracles: straightforward recomputations that share no code with
// the kernels they check.

#include <cmath>
#include <cstdint>
#include <vector>

#include "xtr/dist.hpp"
#include "xtr/graph.hpp"
#include "xtr/rational.hpp"

namespace oracle {

/// Exact definitional check: for every K-subset A of the left part,
/// sum_z |M c_z - K D| < 2 K D M eps, where c_z counts edges from A to z.
/// Returns true when every flat source of size K passes.
inline bool all_flat_sources_close(const xtr::BipartiteGraph& G, std::uint64_t K, xtr::Rational eps) {
  const std::uint32_t N = G.left_size(), M = G.right_size(), D = G.degree();
  std::vector<std::uint32_t> pick(K);
  for (std::uint32_t i = 0; i < K; ++i) pick[i] = i;
  std::vector<std::int64_t> c(M);
  for (;;) {
    std::fill(c.begin(), c.end(), 0);
    for (auto a : pick)
      for (std::uint32_t y = 0; y < D; ++y) ++c[G.edge(a, y)];
    std::int64_t l1 = 0;
    for (std::uint32_t z = 0; z < M; ++z) l1 += std::llabs(static_cast<std::int64_t>(M) * c[z] - static_cast<std::int64_t>(K * D));
    if (static_cast<__int128>(l1) * eps.den >= static_cast<__int128>(2 * K * D * M) * eps.num) return false;
    // next K-subset in lexicographic order
    std::int64_t i = static_cast<std::int64_t>(K) - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == N - K + static_cast<std::uint64_t>(i)) --i;
    if (i < 0) return true;
    ++pick[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < K; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Largest statistical distance over all flat K-sources via explicit
/// output histograms in doubles.
inline double max_flat_distance(const xtr::BipartiteGraph& G, std::uint64_t K) {
  const std::uint32_t N = G.left_size(), M = G.right_size(), D = G.degree();
  double worst = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << N); ++mask) {
    if (static_cast<std::uint64_t>(__builtin_popcountll(mask)) != K) continue;
    std::vector<double> p(M, 0.0);
    for (std::uint32_t a = 0; a < N; ++a)
      if (mask >> a & 1)
        for (std::uint32_t y = 0; y < D; ++y) p[G.edge(a, y)] += 1.0 / static_cast<double>(K * D);
    double s = 0;
    for (double v : p) s += std::abs(v - 1.0 / M);
    worst = std::max(worst, s / 2);
  }
  return worst;
}

}  // namespace oracle
