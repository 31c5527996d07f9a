#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "xtr/randgraph.hpp"

using namespace xtr;

TEST_CASE("degree_bound closed forms") {
  CHECK(degree_bound({256, 16, 16, Rational(1, 4), PropertyKind::extractor}) == 61);
  CHECK(degree_bound({256, 16, 16, Rational(1, 4), PropertyKind::disperser}) == 18);
  // max{4 ln 2, 4 (1 + ln 2 + ln 64)} = 23.4 -> 32
  CHECK(degree_bound({64, 8, 8, Rational(1, 2), PropertyKind::prefix}) == 32);
  CHECK(degree_bound({16, 4, 4, Rational(9, 20), PropertyKind::extractor}) == 12);
  CHECK(degree_bound({64, 8, 8, Rational(3, 10), PropertyKind::extractor}) == 35);
}

TEST_CASE("degree_bound recomputed from the formulas") {
  for (std::uint64_t N : {16u, 64u, 256u})
    for (std::uint64_t K : {2u, 4u, 8u})
      for (std::uint64_t M : {4u, 8u, 16u})
        for (std::int64_t q : {3, 5, 10}) {
          const double e = 1.0 / static_cast<double>(q);
          const double ext = std::max(double(M) / double(K) * std::log(2.0) / (e * e),
                                      (std::log(double(N) / double(K)) + 1) / (e * e));
          const double dis =
              double(M) / double(K) * (std::log(1 / e) + 1) + (std::log(double(N) / double(K)) + 1) / e;
          auto expect = [](double v) {
            const double r = std::round(v);
            return std::abs(v - r) <= 1e-9 ? static_cast<std::uint64_t>(r) + 1 : static_cast<std::uint64_t>(std::ceil(v));
          };
          CHECK(degree_bound({N, M, K, Rational(1, q), PropertyKind::extractor}) == expect(ext));
          CHECK(degree_bound({N, M, K, Rational(1, q), PropertyKind::disperser}) == expect(dis));
        }
}

TEST_CASE("degree_bound monotone in eps and K") {
  for (auto kind : {PropertyKind::disperser, PropertyKind::extractor, PropertyKind::prefix}) {
    for (std::uint64_t K = 2; K <= 32; K *= 2)
      for (std::int64_t q = 3; q < 20; ++q) {
        const ExistenceParams a{64, 16, K, Rational(1, q), kind};
        const ExistenceParams b{64, 16, K, Rational(1, q + 1), kind};
        CHECK(degree_bound(a) <= degree_bound(b));
        if (K < 32) {
          const ExistenceParams c{64, 16, K * 2, Rational(1, q), kind};
          CHECK(degree_bound(c) <= degree_bound(a));
        }
      }
  }
}

TEST_CASE("params validation") {
  CHECK_THROWS(ExistenceParams{16, 4, 1, Rational(1, 2), PropertyKind::extractor}.validate());
  CHECK_THROWS(ExistenceParams{16, 4, 32, Rational(1, 2), PropertyKind::extractor}.validate());
  CHECK_THROWS(ExistenceParams{16, 4, 4, Rational(1), PropertyKind::extractor}.validate());
  CHECK_THROWS(ExistenceParams{12, 4, 4, Rational(1, 2), PropertyKind::prefix}.validate());
  CHECK_NOTHROW(ExistenceParams{16, 4, 4, Rational(1, 2), PropertyKind::prefix}.validate());
}

TEST_CASE("sample_graph determinism and degenerate degree") {
  CHECK(sample_graph(2, 2, 2, 42) == sample_graph(2, 2, 2, 42));
  CHECK(sample_graph(8, 4, 0, 1).adjacency().empty());
  CHECK_FALSE(sample_graph(64, 64, 4, 1) == sample_graph(64, 64, 4, 2));
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
}

TEST_CASE("sample_graph endpoints are uniform") {
  const std::uint32_t M = 10;
  const auto G = sample_graph(1000, M, 100, 2024);
  std::vector<double> c(M, 0);
  for (auto z : G.adjacency()) ++c[z];
  const double expect = 1e5 / M;
  double chi = 0;
  for (double v : c) chi += (v - expect) * (v - expect) / expect;
  // 9 degrees of freedom: mean 9, sd sqrt(18); 3 sigma above the mean.
  CHECK(chi < 9 + 3 * std::sqrt(18.0));
}

TEST_CASE("random_subset") {
  const auto s = random_subset(20, 7, 3);
  CHECK(s.size() == 7);
  auto sorted = s;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  CHECK(random_subset(20, 7, 3) == s);
}

TEST_CASE("existence_trial examples") {
  const auto r = existence_trial({16, 4, 4, Rational(9, 20), PropertyKind::extractor}, 50, 1);
  CHECK(r.D == 12);
  CHECK(r.pass_fraction > 0);
  CHECK(r.trials.size() == 50);
  for (const auto& t : r.trials) CHECK(t.pass == t.witness.empty());

  const auto easy = existence_trial({16, 4, 4, Rational(999, 1000), PropertyKind::extractor}, 10, 2);
  CHECK(easy.pass_fraction == 1.0);

  for (auto kind : {PropertyKind::extractor, PropertyKind::disperser}) {
    const auto none = existence_trial({16, 4, 4, Rational(1, 10), kind}, 5, 3, {}, 0);
    CHECK(none.pass_fraction == 0.0);
  }
}

TEST_CASE("existence_trial determinism") {
  const ExistenceParams p{16, 8, 2, Rational(1, 3), PropertyKind::disperser};
  const auto a = existence_trial(p, 10, 77);
  const auto b = existence_trial(p, 10, 77);
  for (std::size_t i = 0; i < 10; ++i) {
    CHECK(a.trials[i].seed == b.trials[i].seed);
    CHECK(a.trials[i].pass == b.trials[i].pass);
    CHECK(a.trials[i].witness == b.trials[i].witness);
  }
}

TEST_CASE("prefix existence at n=6, k=3, m=3") {
  const auto r = existence_trial({64, 8, 8, Rational(3, 10), PropertyKind::prefix}, 5, 4);
  CHECK(r.pass_fraction > 0);
}
