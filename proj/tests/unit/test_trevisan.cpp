#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "xtr/dist.hpp"
#include "xtr/error.hpp"
#include "xtr/graph.hpp"
#include "xtr/trevisan.hpp"
#include "xtr/verify.hpp"

using namespace xtr;

namespace {

BitString random_bits(std::size_t n, std::mt19937_64& rng) {
  BitString b(n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, rng() & 1);
  return b;
}

}  // namespace

TEST_CASE("nw_generate examples") {
  const auto design = greedy_weak_design(3, 4);
  std::mt19937_64 rng(1);
  const auto y = random_bits(static_cast<std::size_t>(design.universe()), rng);
  CHECK(nw_generate(BitString(8), design, y) == BitString(4));

  const DesignFamily first(6, 3, {{0, 1, 2}});
  const auto f = random_bits(8, rng);
  const auto y6 = BitString::from_binary("101110");
  CHECK(nw_generate(f, first, y6) == BitString::from_uint(f[0b101], 1));
}

TEST_CASE("nw_generate against per-bit restriction at l=3, d=9, m=4") {
  std::mt19937_64 rng(2);
  const DesignFamily design(9, 3, {{0, 1, 2}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_bits(8, rng);
    const auto y = random_bits(9, rng);
    const auto out = nw_generate(f, design, y);
    for (int i = 0; i < 4; ++i) {
      const auto& S = design.set(i);
      const unsigned idx = (y[S[0]] << 2) | (y[S[1]] << 1) | y[S[2]];
      CHECK(out[static_cast<std::size_t>(i)] == f[idx]);
    }
  }
  CHECK_THROWS_AS(nw_generate(BitString(8), design, BitString(8)), DimensionError);
  CHECK_THROWS_AS(nw_generate(BitString(4), design, BitString(9)), DimensionError);
}

TEST_CASE("trevisan_build feasibility at n=16, m=2, eps=1/2") {
  // delta = 1/16 forces t with 2^t >= ceil(16/t) * 128.
  const Rational eps(1, 2);
  const auto code = build_code(16, eps * Rational(1, 8));
  const auto d = greedy_weak_design(code.log_length(), 2).universe();
  const bool feasible = 16 - 3 * 2 - d - 3 >= 2;
  if (feasible) {
    CHECK_NOTHROW(trevisan_build(16, 16, 2, eps));
  } else {
    CHECK_THROWS_AS(trevisan_build(16, 16, 2, eps), Infeasible);
    try {
      trevisan_build(16, 16, 2, eps);
    } catch (const Infeasible& e) {
      CHECK(std::string(e.what()).find("k - 3*log2(m/eps) - d - 3 >= m") != std::string::npos);
    }
  }
}

TEST_CASE("trevisan_build preconditions") {
  CHECK_THROWS_AS(trevisan_build(16, 4, 5, Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(trevisan_build(16, 16, 2, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(trevisan_build(16, 17, 2, Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("a feasible parameter set") {
  const auto p = trevisan_build(1000, 1000, 1, Rational(1, 2));
  CHECK(p.delta == Rational(1, 8));
  CHECK(p.log_m_over_eps == 1);
  CHECK(p.design.set_size() == p.code.log_length());
  CHECK(Rational(1) <= p.rho_budget);
  CHECK(verify_design(p.design, DesignKind::weak, Rational(1)).pass);
  std::mt19937_64 rng(3);
  const auto x = random_bits(1000, rng);
  const auto y = random_bits(static_cast<std::size_t>(p.seed_bits()), rng);
  CHECK(trevisan_eval(p, x, y).size() == 1);
  CHECK(trevisan_eval(p, BitString(1000), y) == BitString(1));
}

TEST_CASE("log2(m/eps) is exact on powers of two and ceiled otherwise") {
  CHECK(trevisan_toy(4, 2, 2, Rational(1, 2)).log_m_over_eps == 2);
  CHECK(trevisan_toy(4, 2, 3, Rational(1, 2)).log_m_over_eps == 3);
  CHECK(trevisan_toy(4, 2, 2, Rational(1, 3)).log_m_over_eps == 3);
}

TEST_CASE("zero message gives zero output") {
  for (int t : {1, 2}) {
    const auto p = trevisan_toy(4, t, t == 1 ? 4 : 2);
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << p.seed_bits()); ++y)
      CHECK(trevisan_eval(p, BitString(4), BitString::from_uint(y, static_cast<std::size_t>(p.seed_bits()))) ==
            BitString(static_cast<std::size_t>(p.m)));
  }
}

TEST_CASE("prefix consistency") {
  const auto p = trevisan_toy(4, 2, 3);
  auto shorter = p;
  shorter.m = 2;
  shorter.design = p.design.prefix(2);
  for (std::uint64_t x = 0; x < 16; ++x)
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << p.seed_bits()); y += 7) {
      const auto bx = BitString::from_uint(x, 4);
      const auto by = BitString::from_uint(y, static_cast<std::size_t>(p.seed_bits()));
      CHECK(trevisan_eval(p, bx, by).prefix(2) == trevisan_eval(shorter, bx, by));
    }
}

TEST_CASE("seed-bit locality") {
  const auto p = trevisan_toy(4, 1, 4);
  const auto d = static_cast<std::size_t>(p.seed_bits());
  for (std::uint64_t x = 0; x < 16; ++x)
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << d); ++y) {
      const auto bx = BitString::from_uint(x, 4);
      const auto by = BitString::from_uint(y, d);
      const auto base = trevisan_eval(p, bx, by);
      for (std::size_t j = 0; j < d; ++j) {
        auto flipped = by;
        flipped.set(j, !by[j]);
        const auto diff = base ^ trevisan_eval(p, bx, flipped);
        for (int i = 0; i < p.m; ++i) {
          const auto& S = p.design.set(i);
          if (std::find(S.begin(), S.end(), j) == S.end()) CHECK_FALSE(diff[static_cast<std::size_t>(i)]);
        }
      }
    }
}

TEST_CASE("strong mode prepends the seed") {
  const auto p = trevisan_toy(4, 2, 2, Rational(1, 2), true);
  CHECK(p.output_bits() == p.seed_bits() + 2);
  const auto y = BitString::from_uint(5, static_cast<std::size_t>(p.seed_bits()));
  auto weak = p;
  weak.strong = false;
  CHECK(trevisan_eval(p, BitString::from_binary("1011"), y) == y + trevisan_eval(weak, BitString::from_binary("1011"), y));
}

TEST_CASE("graph of a toy instance re-evaluates edge by edge") {
  const auto p = trevisan_toy(4, 2, 2);
  const auto F = trevisan_fn(p);
  const auto G = graph_of_function(F);
  for (std::uint64_t x = 0; x < 16; ++x)
    for (std::uint64_t y = 0; y < F.seeds(); ++y)
      CHECK(G.edge(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)) ==
            trevisan_eval(p, BitString::from_uint(x, 4), BitString::from_uint(y, static_cast<std::size_t>(p.seed_bits())))
                .to_uint());
  // Measured worst distance over flat sources of size 8, reported only.
  const auto w = worst_flat_distance(G, 8);
  MESSAGE("n=4 t=2 m=2 d=" << p.seed_bits() << ": worst flat distance at K=8 is " << w.value);
  CHECK(w.value >= 0.0);
}
