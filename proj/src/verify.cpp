#include "xtr/verify.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "xtr/combinatorics.hpp"
#include "xtr/error.hpp"

namespace xtr {

void ExtractorSpec::validate() const {
  if (n < 0 || d < 0 || m < 0) throw std::invalid_argument("negative bit length");
  if (k <= 0 || k > n) throw std::invalid_argument("need 0 < k <= n");
  if (!(Rational(0) < eps) || !(eps < Rational(1))) throw std::invalid_argument("need 0 < eps < 1");
}

namespace {

using u64 = std::uint64_t;
using i128 = __int128;

void check_eps(Rational eps) {
  if (!(Rational(0) < eps) || !(eps < Rational(1)))
    throw std::invalid_argument("eps must lie strictly between 0 and 1");
}

void check_K(const BipartiteGraph& G, u64 K) {
  if (K == 0 || K > G.left_size())
    throw std::invalid_argument("K must satisfy 1 <= K <= N (got " + std::to_string(K) + ")");
}

// One-sided extractor condition for a single B: fails when
// q M |E(A,B)| >= K D (q |B| + p M).
struct ExtractorBound {
  u64 M, K, D;
  Rational eps;
  bool fails(u64 edges, u64 b_size) const {
    const i128 lhs = static_cast<i128>(eps.den) * M * edges;
    const i128 rhs = static_cast<i128>(K) * D * (static_cast<i128>(eps.den) * b_size + static_cast<i128>(eps.num) * M);
    return lhs >= rhs;
  }
};

std::vector<std::uint32_t> mask_members(u64 mask) {
  std::vector<std::uint32_t> out;
  while (mask) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

// K left vertices with the largest counts, ties to the smaller index.
std::vector<std::uint32_t> top_k(const std::vector<u64>& counts, u64 K) {
  std::vector<std::uint32_t> idx(counts.size());
  std::iota(idx.begin(), idx.end(), 0u);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return counts[a] > counts[b]; });
  idx.resize(K);
  std::sort(idx.begin(), idx.end());
  return idx;
}

ExtractorVerdict extractor_witness(const BipartiteGraph& G, u64 K, u64 mask) {
  std::vector<u64> counts(G.left_size(), 0);
  for (std::uint32_t a = 0; a < G.left_size(); ++a)
    for (auto z : G.neighbors(a)) counts[a] += (mask >> z) & 1u;
  ExtractorVerdict v;
  v.pass = false;
  v.B = mask_members(mask);
  v.A = top_k(counts, K);
  for (auto a : v.A) v.edges += counts[a];
  return v;
}

void check_extractor_budget(const BipartiteGraph& G, const Budget& budget) {
  const u64 M = G.right_size();
  if (M >= 63 || (u64{1} << M) > budget.max_subsets)
    throw BudgetExceeded("verify_extractor: 2^" + std::to_string(M) + " right sets exceed the budget of " +
                         std::to_string(budget.max_subsets));
}

// Edge multiplicities hist[a * M + z].
std::vector<std::uint32_t> histogram(const BipartiteGraph& G) {
  const u64 M = G.right_size();
  if (static_cast<u64>(G.left_size()) * M > (u64{1} << 27))
    throw BudgetExceeded("N*M too large for the edge histogram");
  std::vector<std::uint32_t> hist(static_cast<std::size_t>(G.left_size()) * M, 0);
  for (std::uint32_t a = 0; a < G.left_size(); ++a)
    for (auto z : G.neighbors(a)) ++hist[a * M + z];
  return hist;
}

}  // namespace

ExtractorVerdict verify_extractor_serial(const BipartiteGraph& G, u64 K, Rational eps,
                                         const Budget& budget) {
  check_K(G, K);
  check_eps(eps);
  check_extractor_budget(G, budget);
  const u64 M = G.right_size();
  const ExtractorBound bound{M, K, G.degree(), eps};
  std::vector<u64> counts(G.left_size());
  for (u64 mask = 0; mask < (u64{1} << M); ++mask) {
    for (std::uint32_t a = 0; a < G.left_size(); ++a) {
      u64 c = 0;
      for (auto z : G.neighbors(a)) c += (mask >> z) & 1u;
      counts[a] = c;
    }
    std::vector<u64> sorted = counts;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    const u64 edges = std::accumulate(sorted.begin(), sorted.begin() + static_cast<long>(K), u64{0});
    if (bound.fails(edges, static_cast<u64>(std::popcount(mask)))) return extractor_witness(G, K, mask);
  }
  return {};
}

ExtractorVerdict verify_extractor(const BipartiteGraph& G, u64 K, Rational eps, const Budget& budget) {
  check_K(G, K);
  check_eps(eps);
  check_extractor_budget(G, budget);
  const u64 N = G.left_size();
  const int m_bits = static_cast<int>(G.right_size());  // one mask bit per right vertex
  const ExtractorBound bound{G.right_size(), K, G.degree(), eps};
  const auto hist = histogram(G);
  const u64 Mr = G.right_size();

  // Masks are split by their top bits into independent chunks; inside a
  // chunk the low bits run through a Gray code so each step touches one
  // right vertex.
  const int high_bits = std::min(m_bits, 8);
  const int low_bits = m_bits - high_bits;
  const long chunks = 1L << high_bits;
  u64 least_fail = std::numeric_limits<u64>::max();

#pragma omp parallel
  {
    std::vector<u64> counts(N), scratch(N);
    u64 local_fail = std::numeric_limits<u64>::max();
#pragma omp for schedule(dynamic, 1)
    for (long c = 0; c < chunks; ++c) {
      u64 mask = static_cast<u64>(c) << low_bits;
      if (mask >= local_fail) continue;
      std::fill(counts.begin(), counts.end(), 0);
      for (u64 a = 0; a < N; ++a)
        for (u64 rest = mask; rest; rest &= rest - 1)
          counts[a] += hist[a * Mr + static_cast<u64>(std::countr_zero(rest))];
      const u64 steps = u64{1} << low_bits;
      for (u64 i = 0;; ++i) {
        u64 edges;
        if (K == N) {
          edges = std::accumulate(counts.begin(), counts.end(), u64{0});
        } else {
          scratch = counts;
          std::nth_element(scratch.begin(), scratch.begin() + static_cast<long>(K - 1), scratch.end(),
                           std::greater<>());
          edges = std::accumulate(scratch.begin(), scratch.begin() + static_cast<long>(K), u64{0});
        }
        if (mask < local_fail && bound.fails(edges, static_cast<u64>(std::popcount(mask)))) local_fail = mask;
        if (i + 1 == steps) break;
        const int z = std::countr_zero(i + 1);
        const u64 bit = u64{1} << z;
        mask ^= bit;
        if (mask & bit)
          for (u64 a = 0; a < N; ++a) counts[a] += hist[a * Mr + static_cast<u64>(z)];
        else
          for (u64 a = 0; a < N; ++a) counts[a] -= hist[a * Mr + static_cast<u64>(z)];
      }
    }
#pragma omp critical
    least_fail = std::min(least_fail, local_fail);
  }
  if (least_fail == std::numeric_limits<u64>::max()) return {};
  return extractor_witness(G, K, least_fail);
}

namespace {

struct DisperserSetup {
  u64 L = 0;
  u64 total = 0;
  std::vector<u64> gamma;
};

DisperserSetup disperser_setup(const BipartiteGraph& G, u64 K, Rational eps, const Budget& budget) {
  check_K(G, K);
  check_eps(eps);
  const u64 M = G.right_size();
  if (M > 63) throw BudgetExceeded("verify_disperser: M above 63");
  DisperserSetup s;
  s.L = static_cast<u64>((static_cast<i128>(eps.num) * M + eps.den - 1) / eps.den);
  s.total = binomial(M, s.L);
  if (s.total > budget.max_subsets)
    throw BudgetExceeded("verify_disperser: C(" + std::to_string(M) + "," + std::to_string(s.L) +
                         ") sets exceed the budget of " + std::to_string(budget.max_subsets));
  s.gamma.resize(G.left_size());
  for (std::uint32_t a = 0; a < G.left_size(); ++a)
    for (auto z : G.neighbors(a)) s.gamma[a] |= u64{1} << z;
  return s;
}

DisperserVerdict disperser_witness(const DisperserSetup& s, u64 K, u64 Y) {
  DisperserVerdict v;
  v.pass = false;
  v.Y = mask_members(Y);
  for (std::uint32_t a = 0; a < s.gamma.size() && v.A.size() < K; ++a)
    if (!(s.gamma[a] & Y)) v.A.push_back(a);
  return v;
}

u64 avoiding(const std::vector<u64>& gamma, u64 Y) {
  u64 c = 0;
  for (auto g : gamma) c += !(g & Y);
  return c;
}

}  // namespace

DisperserVerdict verify_disperser_serial(const BipartiteGraph& G, u64 K, Rational eps, const Budget& budget) {
  const auto s = disperser_setup(G, K, eps, budget);
  u64 Y = (u64{1} << s.L) - 1;
  for (u64 r = 0; r < s.total; ++r, Y = next_combination(Y))
    if (avoiding(s.gamma, Y) >= K) return disperser_witness(s, K, Y);
  return {};
}

DisperserVerdict verify_disperser(const BipartiteGraph& G, u64 K, Rational eps, const Budget& budget) {
  const auto s = disperser_setup(G, K, eps, budget);
  const u64 chunk = 4096;
  const long chunks = static_cast<long>((s.total + chunk - 1) / chunk);
  u64 least_fail = std::numeric_limits<u64>::max();
#pragma omp parallel for schedule(dynamic, 1)
  for (long c = 0; c < chunks; ++c) {
    const u64 begin = static_cast<u64>(c) * chunk;
    const u64 end = std::min(s.total, begin + chunk);
    u64 Y = unrank_combination(begin, static_cast<unsigned>(s.L));
    for (u64 r = begin; r < end; ++r, Y = next_combination(Y)) {
      if (avoiding(s.gamma, Y) >= K) {
        // Colex rank order is numeric mask order, so the first hit is the chunk minimum.
#pragma omp critical
        least_fail = std::min(least_fail, Y);
        break;
      }
    }
  }
  if (least_fail == std::numeric_limits<u64>::max()) return {};
  return disperser_witness(s, K, least_fail);
}

PrefixVerdict verify_prefix_extractor(const BipartiteGraph& G, int k, Rational eps, const Budget& budget) {
  if (!is_power_of_two(G.left_size()) || !is_power_of_two(G.right_size()))
    throw DimensionError("prefix extractors need N and M powers of two");
  const int m = log2_exact(G.right_size());
  const int n = log2_exact(G.left_size());
  if (k < 0 || k > m || k > n) throw std::invalid_argument("prefix check needs k <= min(n, m)");
  for (int i = 0; i <= k; ++i) {
    auto v = verify_extractor(G.truncated(i), u64{1} << (k - i), eps, budget);
    if (!v.pass) return {false, i, std::move(v)};
  }
  return {};
}

PrefixVerdict verify_prefix_extractor(const ExtractorFn& F, const ExtractorSpec& spec, const Budget& budget) {
  spec.validate();
  if (F.n != spec.n || F.d != spec.d || F.m != spec.m) throw DimensionError("map does not match spec");
  if (spec.k > spec.m) throw std::invalid_argument("prefix check needs k <= m");
  return verify_prefix_extractor(graph_of_function(F), spec.k, spec.eps, budget);
}

namespace {

void check_flat_budget(const BipartiteGraph& G, u64 K, const Budget& budget) {
  check_K(G, K);
  if (G.left_size() > 63) throw BudgetExceeded("worst_flat_distance: N above 63");
  const u64 total = binomial(G.left_size(), K);
  if (total > budget.max_subsets)
    throw BudgetExceeded("worst_flat_distance: C(" + std::to_string(G.left_size()) + "," + std::to_string(K) +
                         ") sets exceed the budget of " + std::to_string(budget.max_subsets));
}

WorstFlat make_worst(const BipartiteGraph& G, u64 K, u64 mask, u64 l1) {
  WorstFlat w;
  w.A = mask_members(mask);
  w.l1_scaled = l1;
  w.scale = 2 * K * G.degree() * G.right_size();
  w.value = static_cast<double>(l1) / static_cast<double>(w.scale);
  return w;
}

u64 flat_l1(const std::vector<std::uint32_t>& hist, u64 M, u64 KD, u64 mask, std::vector<u64>& cz) {
  std::fill(cz.begin(), cz.end(), 0);
  for (u64 rest = mask; rest; rest &= rest - 1) {
    const u64 a = static_cast<u64>(std::countr_zero(rest));
    for (u64 z = 0; z < M; ++z) cz[z] += hist[a * M + z];
  }
  u64 l1 = 0;
  for (u64 z = 0; z < M; ++z) {
    const u64 scaled = M * cz[z];
    l1 += scaled > KD ? scaled - KD : KD - scaled;
  }
  return l1;
}

}  // namespace

WorstFlat worst_flat_distance_serial(const BipartiteGraph& G, u64 K, const Budget& budget) {
  check_flat_budget(G, K, budget);
  const u64 M = G.right_size();
  const u64 KD = K * G.degree();
  const u64 total = binomial(G.left_size(), K);
  u64 best_mask = 0, best = 0;
  bool first = true;
  u64 mask = (u64{1} << K) - 1;
  for (u64 r = 0; r < total; ++r, mask = next_combination(mask)) {
    std::vector<u64> cz(M, 0);
    for (auto a : mask_members(mask))
      for (auto z : G.neighbors(a)) ++cz[z];
    u64 l1 = 0;
    for (u64 z = 0; z < M; ++z) {
      const u64 scaled = M * cz[z];
      l1 += scaled > KD ? scaled - KD : KD - scaled;
    }
    if (first || l1 > best) {
      best = l1;
      best_mask = mask;
      first = false;
    }
  }
  return make_worst(G, K, best_mask, best);
}

WorstFlat worst_flat_distance(const BipartiteGraph& G, u64 K, const Budget& budget) {
  check_flat_budget(G, K, budget);
  const u64 M = G.right_size();
  const u64 KD = K * G.degree();
  const auto hist = histogram(G);
  const u64 total = binomial(G.left_size(), K);
  const u64 chunk = 4096;
  const long chunks = static_cast<long>((total + chunk - 1) / chunk);
  u64 best = 0, best_mask = std::numeric_limits<u64>::max();
#pragma omp parallel
  {
    std::vector<u64> cz(M);
    u64 local_best = 0, local_mask = std::numeric_limits<u64>::max();
#pragma omp for schedule(dynamic, 1)
    for (long c = 0; c < chunks; ++c) {
      const u64 begin = static_cast<u64>(c) * chunk;
      const u64 end = std::min(total, begin + chunk);
      u64 mask = unrank_combination(begin, static_cast<unsigned>(K));
      for (u64 r = begin; r < end; ++r, mask = next_combination(mask)) {
        const u64 l1 = flat_l1(hist, M, KD, mask, cz);
        if (l1 > local_best || (l1 == local_best && mask < local_mask)) {
          local_best = l1;
          local_mask = mask;
        }
      }
    }
#pragma omp critical
    if (local_best > best || (local_best == best && local_mask < best_mask)) {
      best = local_best;
      best_mask = local_mask;
    }
  }
  return make_worst(G, K, best_mask, best);
}

}  // namespace xtr

namespace xtr {

bool certify_extractor(const BipartiteGraph& G, std::uint64_t K, Rational eps, const Budget& budget) {
  const auto M = G.right_size();
  if (M < 63 && (std::uint64_t{1} << M) <= budget.max_subsets) return verify_extractor(G, K, eps, budget).pass;
  if (G.left_size() <= 63 && binomial(G.left_size(), K) <= budget.max_subsets) {
    const auto w = worst_flat_distance(G, K, budget);
    return static_cast<unsigned __int128>(w.l1_scaled) * static_cast<std::uint64_t>(eps.den) <
           static_cast<unsigned __int128>(w.scale) * static_cast<std::uint64_t>(eps.num);
  }
  throw BudgetExceeded("certify_extractor: neither 2^M nor C(N, K) fits the budget");
}

}  // namespace xtr
