#include "xtr/design.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "xtr/error.hpp"

namespace xtr {

DesignFamily::DesignFamily(int d, int l, std::vector<std::vector<std::uint32_t>> sets)
    : d_(d), l_(l), sets_(std::move(sets)) {
  if (d < 0 || l < 0) throw std::invalid_argument("design sizes must be nonnegative");
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto& s = sets_[i];
    std::sort(s.begin(), s.end());
    if (s.size() != static_cast<std::size_t>(l))
      throw DimensionError("set " + std::to_string(i) + " has " + std::to_string(s.size()) + " elements, expected " +
                           std::to_string(l));
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("set " + std::to_string(i) + " repeats an element");
    if (!s.empty() && s.back() >= static_cast<std::uint32_t>(d))
      throw std::out_of_range("set " + std::to_string(i) + " leaves the universe [d]");
  }
}

DesignFamily DesignFamily::prefix(int count) const {
  if (count < 0 || count > this->count()) throw std::out_of_range("design prefix");
  return {d_, l_, {sets_.begin(), sets_.begin() + count}};
}

std::string to_string(DesignKind kind) {
  switch (kind) {
    case DesignKind::design: return "design";
    case DesignKind::weak: return "weak";
    case DesignKind::uniform_weak: return "uniform-weak";
  }
  return "?";
}

namespace {

using u128 = unsigned __int128;

std::vector<std::vector<std::uint64_t>> as_bitsets(const DesignFamily& f) {
  const std::size_t words = (static_cast<std::size_t>(f.universe()) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> out(static_cast<std::size_t>(f.count()), std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < f.count(); ++i)
    for (auto e : f.set(i)) out[static_cast<std::size_t>(i)][e / 64] |= std::uint64_t{1} << (e % 64);
  return out;
}

int overlap(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  int c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
  return c;
}

u128 pow2(int e) {
  if (e >= 127) throw std::overflow_error("design overlap too large");
  return u128{1} << e;
}

}  // namespace

DesignVerdict verify_design(const DesignFamily& family, DesignKind kind, Rational rho) {
  if (rho.num < 0) throw std::invalid_argument("rho must be nonnegative");
  const auto bits = as_bitsets(family);
  const int m = family.count();
  const auto num = static_cast<u128>(rho.num);
  const auto den = static_cast<u128>(rho.den);
  for (int j = 0; j < m; ++j) {
    u128 sum = 0;
    for (int i = 0; i < j; ++i) {
      const u128 term = pow2(overlap(bits[static_cast<std::size_t>(i)], bits[static_cast<std::size_t>(j)]));
      if (kind == DesignKind::design && term * den > num) return {false, j, i};
      sum += term;
    }
    if (kind == DesignKind::weak && sum * den > num * static_cast<u128>(m - 1)) return {false, j, -1};
    if (kind == DesignKind::uniform_weak && sum * den > num * static_cast<u128>(j)) return {false, j, -1};
  }
  return {};
}

DesignFamily greedy_weak_design(int l, int m, Rational rho) {
  if (l < 1 || m < 1) throw std::invalid_argument("greedy_weak_design needs l >= 1 and m >= 1");
  if (rho < Rational(1)) throw std::invalid_argument("greedy_weak_design needs rho >= 1");
  if (l > 100) throw BudgetExceeded("greedy_weak_design: l above 100");

  const int width = std::max(1, static_cast<int>(std::ceil(l / std::log(2.0))));
  const int phase_size = l * width;
  const u128 budget_num = static_cast<u128>(rho.num) * static_cast<u128>(m - 1);
  const auto den = static_cast<u128>(rho.den);

  std::vector<std::vector<std::uint32_t>> sets;
  std::vector<std::vector<char>> member;  // membership within the current phase
  int phase_begin = 0;
  std::uint32_t base = 0;

  auto build = [&](int j) {
    std::vector<std::uint32_t> chosen;
    std::vector<int> inter(static_cast<std::size_t>(j - phase_begin), 0);
    for (int b = 0; b < l; ++b) {
      int best = 0;
      u128 best_potential = 0;
      for (int c = 0; c < width; ++c) {
        const int local = b * width + c;
        u128 potential = 0;
        for (std::size_t i = 0; i < inter.size(); ++i) potential += pow2(inter[i] + member[i][static_cast<std::size_t>(local)]);
        if (c == 0 || potential < best_potential) {
          best = local;
          best_potential = potential;
        }
      }
      for (std::size_t i = 0; i < inter.size(); ++i) inter[i] += member[i][static_cast<std::size_t>(best)];
      chosen.push_back(static_cast<std::uint32_t>(best));
    }
    u128 sum = static_cast<u128>(phase_begin);  // earlier phases are disjoint: 2^0 each
    for (int v : inter) sum += pow2(v);
    return std::pair{chosen, sum};
  };

  for (int j = 0; j < m; ++j) {
    auto [local, sum] = build(j);
    if (sum * den > budget_num) {
      phase_begin = j;
      base += static_cast<std::uint32_t>(phase_size);
      member.clear();
      local = build(j).first;
    }
    std::vector<char> mark(static_cast<std::size_t>(phase_size), 0);
    std::vector<std::uint32_t> global;
    for (auto e : local) {
      mark[e] = 1;
      global.push_back(base + e);
    }
    member.push_back(std::move(mark));
    sets.push_back(std::move(global));
  }

  std::vector<std::uint32_t> used;
  for (auto& s : sets) used.insert(used.end(), s.begin(), s.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& s : sets)
    for (auto& e : s) e = static_cast<std::uint32_t>(std::lower_bound(used.begin(), used.end(), e) - used.begin());
  return {static_cast<int>(used.size()), l, std::move(sets)};
}

}  // namespace xtr
