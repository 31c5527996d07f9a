#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "xtr/error.hpp"
#include "xtr/extractor_fn.hpp"

namespace xtr {

using Exact = boost::multiprecision::cpp_rational;

inline constexpr int kMaxDistBits = 24;
inline constexpr int kMaxExactDistBits = 12;
inline constexpr double kDefaultTolerance = 1e-9;

namespace weight {

template <class W>
W ratio(std::uint64_t a, std::uint64_t b) {
  if constexpr (std::is_same_v<W, Exact>)
    return Exact(a, b);
  else
    return static_cast<W>(a) / static_cast<W>(b);
}

inline double to_double(double w) { return w; }
inline double to_double(const Exact& w) { return static_cast<double>(w); }

/// -log2(w) for w > 0. Exact weights go through numerator and denominator
/// separately so that 1/K gives log2 K bit-for-bit.
inline double neg_log2(double w) { return -std::log2(w); }
inline double neg_log2(const Exact& w) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return std::log2(static_cast<double>(denominator(w))) -
         std::log2(static_cast<double>(numerator(w)));
}

}  // namespace weight

/// Support of a flat source: sorted, duplicate-free indices into [2^n].
struct FlatSource {
  int n = 0;
  std::vector<std::uint64_t> support;

  FlatSource(int bits, std::vector<std::uint64_t> elements);
  std::size_t size() const { return support.size(); }
};

/// Dense probability assignment over all 2^n strings of length n.
template <class W>
class BasicDist {
 public:
  BasicDist(int n, std::vector<W> probs, double tolerance = kDefaultTolerance)
      : n_(n), probs_(std::move(probs)) {
    check_bits(n);
    if (probs_.size() != (std::size_t{1} << n))
      throw DimensionError("distribution over " + std::to_string(n) + " bits needs " +
                           std::to_string(std::size_t{1} << n) + " weights");
    W total = 0;
    for (const auto& p : probs_) {
      if (p < 0) throw InvalidDistribution("negative weight");
      total += p;
    }
    if constexpr (std::is_same_v<W, Exact>) {
      if (total != 1) throw InvalidDistribution("weights sum to " + total.str() + ", not 1");
    } else {
      if (!(std::abs(total - 1) <= tolerance))
        throw InvalidDistribution("weights sum to " + std::to_string(total) + ", not 1");
    }
  }

  static BasicDist uniform(int n) {
    check_bits(n);
    const std::size_t size = std::size_t{1} << n;
    return BasicDist(n, std::vector<W>(size, weight::ratio<W>(1, size)));
  }

  static BasicDist point(int n, std::uint64_t a) {
    check_bits(n);
    std::vector<W> p(std::size_t{1} << n, W(0));
    p.at(a) = 1;
    return BasicDist(n, std::move(p));
  }

  static BasicDist flat(const FlatSource& s) {
    check_bits(s.n);
    std::vector<W> p(std::size_t{1} << s.n, W(0));
    for (auto a : s.support) p.at(a) = weight::ratio<W>(1, s.size());
    return BasicDist(s.n, std::move(p));
  }

  int bits() const { return n_; }
  std::size_t size() const { return probs_.size(); }
  const W& operator[](std::uint64_t a) const { return probs_[a]; }
  std::span<const W> probs() const { return probs_; }

 private:
  static void check_bits(int n) {
    const int limit = std::is_same_v<W, Exact> ? kMaxExactDistBits : kMaxDistBits;
    if (n < 0 || n > limit)
      throw BudgetExceeded("distribution over " + std::to_string(n) + " bits exceeds the " +
                           std::to_string(limit) + "-bit dense limit");
  }

  int n_;
  std::vector<W> probs_;
};

using Dist = BasicDist<double>;
using ExactDist = BasicDist<Exact>;

/// H_inf(X) = min over the support of -log2 X(a).
template <class W>
double min_entropy(const BasicDist<W>& X) {
  const auto probs = X.probs();
  const W& top = *std::max_element(probs.begin(), probs.end());
  if (top <= 0) throw InvalidDistribution("all-zero distribution");
  return weight::neg_log2(top);
}

/// Half the L1 distance.
template <class W>
W stat_dist(const BasicDist<W>& X, const BasicDist<W>& Y) {
  if (X.bits() != Y.bits()) throw DimensionError("stat_dist over different lengths");
  W sum = 0;
  for (std::size_t a = 0; a < X.size(); ++a) sum += X[a] > Y[a] ? X[a] - Y[a] : Y[a] - X[a];
  return sum / 2;
}

template <class W>
struct FlatComponent {
  W weight;
  FlatSource source;
};

/// Writes X as a convex combination of flat sources of size K.
///
/// Each step picks the K largest remaining weights (ties by smaller string)
/// and lowers them by the largest amount that keeps every weight at most
/// 1/K of the remaining mass. Either a chosen weight reaches zero or an
/// unchosen one becomes tight, so at most 2^n steps are needed.
template <class W>
std::vector<FlatComponent<W>> flat_decompose(const BasicDist<W>& X, std::uint64_t K,
                                             double tolerance = kDefaultTolerance) {
  if (K == 0) throw std::invalid_argument("flat_decompose: K must be positive");
  if (K > X.size()) throw InvalidDistribution("flat_decompose: K exceeds the support size");
  const auto probs = X.probs();
  W top = *std::max_element(probs.begin(), probs.end());
  if constexpr (std::is_same_v<W, Exact>) {
    if (top * K > 1) throw InvalidDistribution("entropy deficit: H_inf(X) < log2 K");
  } else {
    if (top * static_cast<double>(K) > 1 + tolerance)
      throw InvalidDistribution("entropy deficit: H_inf(X) < log2 K");
  }

  std::vector<W> w(probs.begin(), probs.end());
  W mass = 1;
  // Residues below this are float noise from earlier subtractions.
  const double noise = std::is_same_v<W, Exact> ? 0.0 : tolerance * 1e-3;
  std::vector<std::uint64_t> order(w.size());
  std::vector<FlatComponent<W>> out;
  for (std::size_t step = 0; step <= w.size(); ++step) {
    if (weight::to_double(mass) <= noise) return out;
    std::iota(order.begin(), order.end(), std::uint64_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint64_t a, std::uint64_t b) { return w[a] > w[b]; });
    W amount = w[order[K - 1]];
    if (K < w.size()) {
      const W room = mass / static_cast<W>(K) - w[order[K]];
      if (room < amount) amount = room;
    }
    if (weight::to_double(amount) <= noise) {
      if constexpr (!std::is_same_v<W, Exact>) return out;
      throw InvalidDistribution("flat_decompose made no progress");
    }
    std::vector<std::uint64_t> chosen(order.begin(), order.begin() + static_cast<long>(K));
    for (auto a : chosen) {
      w[a] -= amount;
      if (weight::to_double(w[a]) < noise) w[a] = 0;
    }
    mass -= amount * static_cast<W>(K);
    std::sort(chosen.begin(), chosen.end());
    out.push_back({amount * static_cast<W>(K), FlatSource(X.bits(), std::move(chosen))});
  }
  throw InvalidDistribution("flat_decompose exceeded 2^n steps");
}

/// Distribution of F(X, U_d).
template <class W>
BasicDist<W> push_forward(const ExtractorFn& F, const BasicDist<W>& X) {
  if (X.bits() != F.n) throw DimensionError("push_forward: source length differs from F.n");
  const std::uint64_t seeds = F.seeds();
  const std::uint64_t outs = F.outputs();
  std::vector<W> out(outs, W(0));
  std::vector<std::uint64_t> hits(outs, 0);
  for (std::uint64_t x = 0; x < X.size(); ++x) {
    if (X[x] == 0) continue;
    std::fill(hits.begin(), hits.end(), 0);
    for (std::uint64_t y = 0; y < seeds; ++y) {
      const auto z = F.eval(x, y);
      if (z >= outs) throw DimensionError("push_forward: F output out of range");
      ++hits[z];
    }
    for (std::uint64_t z = 0; z < outs; ++z)
      if (hits[z]) out[z] += X[x] * weight::ratio<W>(hits[z], seeds);
  }
  return BasicDist<W>(F.m, std::move(out));
}

/// Collision probability col(X) = sum_a X(a)^2.
template <class W>
W collision_measure(const BasicDist<W>& X) {
  W sum = 0;
  for (const auto& p : X.probs()) sum += p * p;
  return sum;
}

}  // namespace xtr
