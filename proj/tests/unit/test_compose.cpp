#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "xtr/compose.hpp"
#include "xtr/graph.hpp"
#include "xtr/randgraph.hpp"
#include "xtr/verify.hpp"

using namespace xtr;

namespace {

BitString bits(std::uint64_t v, int len) { return BitString::from_uint(v, static_cast<std::size_t>(len)); }

SeededMap seed_pass(int n, int d) {
  return {n, d, d, [](const BitString&, const BitString& y) { return y; }};
}

// Worst distance of F over flat sources of size 2^k: the extractor error
// for min-entropy k.
double extractor_error(const SeededMap& F, int k) {
  return worst_flat_distance(graph_of_function(to_fn(F)), std::uint64_t{1} << k).value;
}

// Joint of a block source: X1 flat on a K1-set, X2 | x1 flat on a K2-set
// that depends on x1.
Dist block_joint(int n1, int n2, std::uint32_t K1, std::uint32_t K2, std::uint64_t seed) {
  std::vector<double> p(std::size_t{1} << (n1 + n2), 0.0);
  const auto rows = random_subset(1u << n1, K1, seed);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto cols = random_subset(1u << n2, K2, trial_seed(seed, r));
    for (auto c : cols) p[(std::size_t{rows[r]} << n2) | c] = 1.0 / (K1 * K2);
  }
  return Dist(n1 + n2, p);
}

std::vector<double> random_weights(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.1, 1.0);
  std::vector<double> w(n);
  double s = 0;
  for (auto& v : w) s += v = u(rng);
  for (auto& v : w) v /= s;
  return w;
}

// Random somewhere-random (k, 0, 0) source: given Y = i >= 1, Z_i is uniform
// and the other blocks follow an arbitrary conditional law.
SomewhereRandomSource random_srs(int b, int k, std::mt19937_64& rng) {
  const std::size_t values = std::size_t{1} << (b * k);
  std::vector<double> w(values * static_cast<std::size_t>(b + 1), 0.0);
  const auto py = random_weights(static_cast<std::size_t>(b), rng);
  const std::uint64_t block = std::uint64_t{1} << k;
  for (int i = 1; i <= b; ++i) {
    const int shift = (b - i) * k;
    for (std::uint64_t u = 0; u < block; ++u) {
      // spread mass py/2^k over strings whose block i equals u
      std::vector<std::uint64_t> matching;
      for (std::uint64_t z = 0; z < values; ++z)
        if (((z >> shift) & (block - 1)) == u) matching.push_back(z);
      const auto share = random_weights(matching.size(), rng);
      for (std::size_t j = 0; j < matching.size(); ++j)
        if (rng() % 3 == 0 || j == 0) w[matching[j] * static_cast<std::size_t>(b + 1) + static_cast<std::size_t>(i)] += share[j];
      // renormalise this (i, u) slice to py / 2^k
      double s = 0;
      for (auto z : matching) s += w[z * static_cast<std::size_t>(b + 1) + static_cast<std::size_t>(i)];
      for (auto z : matching) w[z * static_cast<std::size_t>(b + 1) + static_cast<std::size_t>(i)] *= py[static_cast<std::size_t>(i - 1)] / double(block) / s;
    }
  }
  return SomewhereRandomSource(b, k, w);
}

}  // namespace

TEST_CASE("compose_serial examples") {
  const auto F1 = random_table_map(3, 2, 2, 1);
  const auto C = compose_serial(F1, seed_pass(2, 2));
  CHECK(C.n == 5);
  CHECK(C.d == 2);
  for (std::uint64_t x = 0; x < 32; ++x)
    for (std::uint64_t y = 0; y < 4; ++y) CHECK(C(bits(x, 5), bits(y, 2)) == F1(bits(x >> 2, 3), bits(y, 2)));

  const auto K = compose_serial(constant_map(3, 2, bits(1, 2)), random_table_map(2, 1, 2, 2));
  for (std::uint64_t x = 0; x < 32; ++x) CHECK(K(bits(x, 5), bits(1, 1)) == bits(1, 2));
  CHECK_THROWS_AS(compose_serial(F1, random_table_map(2, 1, 3, 3)), DimensionError);
}

TEST_CASE("composition with a uniform seed stage adds nothing") {
  const auto F1 = random_table_map(3, 2, 2, 4);
  const auto C = compose_serial(F1, seed_pass(2, 2));
  const auto joint = block_joint(3, 2, 4, 4, 5);
  Dist x1(3, [&] {
    std::vector<double> p(8, 0.0);
    for (std::size_t a = 0; a < joint.size(); ++a) p[a >> 2] += joint[a];
    return p;
  }());
  const double composed = stat_dist(push_forward(to_fn(C), joint), Dist::uniform(2));
  const double alone = stat_dist(push_forward(to_fn(F1), x1), Dist::uniform(2));
  CHECK(composed <= alone + 1e-12);
}

TEST_CASE("serial composition error on exact block sources") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const int k1 = 2, k2 = 2;
    const auto F1 = random_table_map(3, 2, 1, trial_seed(20, s));
    const auto F2 = random_table_map(3, 2, 2, trial_seed(21, s));
    const double e1 = extractor_error(F1, k1), e2 = extractor_error(F2, k2);
    const auto C = compose_serial(F1, F2);
    const auto joint = block_joint(3, 3, 4, 4, trial_seed(22, s));
    const BlockSource src{3, 3, joint, double(k1), double(k2)};
    REQUIRE(check_block_source(src).pass);
    const double got = stat_dist(push_forward(to_fn(C), joint), Dist::uniform(1));
    CHECK(got <= e1 + e2 + 1e-9);
  }
}

TEST_CASE("check_block_source examples") {
  const BlockSource product{2, 3, Dist::uniform(5), 2, 3};
  CHECK(check_block_source(product).pass);

  std::vector<double> copy(1u << 6, 0.0);
  for (std::uint64_t a = 0; a < 8; ++a) copy[(a << 3) | a] = 1.0 / 8;
  const BlockSource dup{3, 3, Dist(6, copy), 3, 0.5};
  const auto v = check_block_source(dup);
  CHECK_FALSE(v.pass);
  REQUIRE(v.bad_x1.has_value());
  CHECK(*v.bad_x1 == 0);
  CHECK(v.conditional_entropy == doctest::Approx(0.0));
}

TEST_CASE("check_block_source against direct conditional entropies") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> p(64);
    std::uniform_real_distribution<double> u(0, 1);
    double s = 0;
    for (auto& v : p) s += v = (rng() % 4 == 0) ? 0.0 : u(rng);
    for (auto& v : p) v /= s;
    const Dist joint(6, p);
    double h1 = 1e9, h2 = 1e9;
    std::vector<double> row(8, 0.0);
    for (std::size_t a = 0; a < 64; ++a) row[a >> 3] += p[a];
    double top = 0;
    for (double r : row) top = std::max(top, r);
    h1 = -std::log2(top);
    for (std::size_t x1 = 0; x1 < 8; ++x1) {
      if (row[x1] <= 0) continue;
      double peak = 0;
      for (std::size_t x2 = 0; x2 < 8; ++x2) peak = std::max(peak, p[x1 * 8 + x2] / row[x1]);
      h2 = std::min(h2, -std::log2(peak));
    }
    const double k1 = 1.5, k2 = 1.0;
    const auto v = check_block_source({3, 3, joint, k1, k2});
    CHECK(v.marginal_entropy == doctest::Approx(h1));
    CHECK(v.pass == (h1 >= k1 - 1e-9 && h2 >= k2 - 1e-9));
  }
}

TEST_CASE("somewhere-random sources have min-entropy k") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int b = 2 + trial % 2, k = 2;
    const auto src = random_srs(b, k, rng);
    CHECK(src.satisfies(0, 0));
    CHECK(min_entropy(src.joint_blocks()) >= k - 1e-9);
  }
}

TEST_CASE("two-block merger examples") {
  const auto E = random_table_map(4, 3, 2, 31);
  const auto M = two_block_merger(E);
  CHECK(M.k == 2);
  CHECK(M.blocks == 2);
  const double eps = extractor_error(E, 2);

  // Z1 uniform, Z2 a function of Z1, selector always 1.
  std::vector<double> w(16 * 3, 0.0);
  for (std::uint64_t z1 = 0; z1 < 4; ++z1) w[((z1 << 2) | (z1 ^ 3)) * 3 + 1] = 0.25;
  const SomewhereRandomSource src(2, 2, w);
  CHECK(src.satisfies(0, 0));
  const auto out = push_forward(to_fn(E), src.joint_blocks());
  CHECK(stat_dist(out, Dist::uniform(2)) <= eps + 1e-12);
  const BitString z[2] = {bits(1, 2), bits(2, 2)};
  CHECK(M(z, bits(5, 3)) == E(bits(0b0110, 4), bits(5, 3)));

  // (Z1, Z1) with Z1 uniform.
  std::vector<double> dup(16 * 3, 0.0);
  for (std::uint64_t z1 = 0; z1 < 4; ++z1) dup[((z1 << 2) | z1) * 3 + 1] = 0.25;
  CHECK(SomewhereRandomSource(2, 2, dup).satisfies(0, 0));
  CHECK_THROWS_AS(two_block_merger(random_table_map(3, 1, 1, 1)), DimensionError);
}

TEST_CASE("recursive merger levels 0, 1 and 2") {
  const MergerFamily same = [](int k) { return random_merger(k, 2, 2, k, 40 + static_cast<std::uint64_t>(k)); };
  const auto M0 = recursive_merger(same, 2, 0);
  const BitString one[1] = {bits(3, 2)};
  CHECK(M0(one, BitString(0)) == bits(3, 2));

  const auto base = same(2);
  const auto M1 = recursive_merger(same, 2, 1);
  const BitString two[2] = {bits(1, 2), bits(2, 2)};
  for (std::uint64_t y = 0; y < 4; ++y) CHECK(M1(two, bits(y, 2)) == base(two, bits(y, 2)));

  const auto M2 = recursive_merger(same, 2, 2);
  CHECK(M2.blocks == 4);
  CHECK(M2.d == 4);
  for (std::uint64_t z = 0; z < 256; ++z)
    for (std::uint64_t y = 0; y < 16; ++y) {
      const BitString four[4] = {bits(z >> 6, 2), bits(z >> 4 & 3, 2), bits(z >> 2 & 3, 2), bits(z & 3, 2)};
      const auto d1 = bits(y >> 2, 2), d2 = bits(y & 3, 2);
      const BitString a[2] = {four[0], four[1]}, b[2] = {four[2], four[3]};
      const BitString mid[2] = {base(a, d2), base(b, d2)};
      CHECK(M2(four, bits(y, 4)) == base(mid, d1));
    }
}

TEST_CASE("recursive merger lengths with shrinking output") {
  // m(k) = 1 and d(k) = k - 1
  const MergerFamily shrink = [](int k) { return random_merger(k, 2, k - 1, k - 1, 50 + static_cast<std::uint64_t>(k)); };
  const auto M3 = recursive_merger(shrink, 5, 3);
  CHECK(M3.blocks == 8);
  CHECK(M3.m == 5 - 3);
  CHECK(M3.d == 4 + 3 + 2);
  // Unrolled: round one uses d_3 (length 2, last), round two d_2, round three d_1.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<BitString> z;
    for (int i = 0; i < 8; ++i) z.push_back(bits(rng() % 32, 5));
    const auto y = bits(rng() % 512, 9);
    const auto d1 = y.substr(0, 2), d2 = y.substr(2, 3), d3 = y.substr(5, 4);
    const auto m5 = shrink(5), m4 = shrink(4), m3 = shrink(3);
    std::vector<BitString> l2, l1;
    for (int i = 0; i < 8; i += 2) {
      const BitString p[2] = {z[i], z[i + 1]};
      l2.push_back(m5(p, d3));
    }
    for (int i = 0; i < 4; i += 2) {
      const BitString p[2] = {l2[i], l2[i + 1]};
      l1.push_back(m4(p, d2));
    }
    const BitString last[2] = {l1[0], l1[1]};
    CHECK(M3(z, y) == m3(last, d1));
  }
}

TEST_CASE("merger_compose examples") {
  // n = 1: a single block.
  const auto E1 = random_table_map(1, 1, 2, 60), E2 = random_table_map(1, 2, 2, 61);
  const auto M1 = random_merger(2, 1, 1, 2, 62);
  for (std::uint64_t a = 0; a < 2; ++a) {
    const auto z1 = E2(BitString(0), E1(bits(a, 1), bits(1, 1)));
    const BitString blk[1] = {z1};
    CHECK(merger_compose(E1, E2, M1, bits(a, 1), bits(1, 1), bits(0, 1)) == M1(blk, bits(0, 1)));
  }

  // constant extractors
  const auto C1 = constant_map(3, 2, bits(2, 2)), C2 = constant_map(3, 2, bits(1, 2));
  const auto M = random_merger(2, 3, 1, 2, 63);
  const BitString consts[3] = {bits(1, 2), bits(1, 2), bits(1, 2)};
  for (std::uint64_t a = 0; a < 8; ++a) CHECK(merger_compose(C1, C2, M, bits(a, 3), bits(0, 2), bits(1, 1)) == M(consts, bits(1, 1)));
}

TEST_CASE("merger_compose step-by-step oracle at n=2") {
  const auto E1 = random_table_map(2, 2, 3, 70), E2 = random_table_map(2, 2, 2, 71);
  const auto M = random_merger(2, 2, 1, 2, 72);
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t r1 = 0; r1 < 4; ++r1)
      for (std::uint64_t r2 = 0; r2 < 2; ++r2) {
        const auto A = bits(a, 2);
        // q_1 = E1(a_1 a_2), q_2 = E1(0 a_2); z_1 = E2(00, q_1), z_2 = E2(0 a_1, q_2)
        const auto q1 = E1(A, bits(r1, 2)).prefix(2);
        const auto q2 = E1(bits(a & 1, 2), bits(r1, 2)).prefix(2);
        const auto z1 = E2(bits(0, 2), q1);
        const auto z2 = E2(bits(a >> 1, 2), q2);
        const BitString zs[2] = {z1, z2};
        ComposeTrace trace;
        CHECK(merger_compose(E1, E2, M, A, bits(r1, 2), bits(r2, 1), &trace) == M(zs, bits(r2, 1)));
        CHECK(trace.q == std::vector<BitString>{q1, q2});
        CHECK(trace.z == std::vector<BitString>{z1, z2});
      }
}

TEST_CASE("iterated composition: t=1, t=2, t=3 and constants") {
  const int n = 3;
  const auto E1 = random_table_map(n, 2, 2, 80), E2 = random_table_map(n, 2, 2, 81), E3 = random_table_map(n, 2, 2, 82);
  const auto M1 = random_merger(2, n, 1, 2, 83), M2 = random_merger(2, n, 1, 2, 84);

  const SeededMap one[1] = {E1};
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = 0; y < 4; ++y) CHECK(iterated_compose_dp(one, {}, bits(x, n), bits(y, 2), {}) == E1(bits(x, n), bits(y, 2)));

  const SeededMap two[2] = {E1, E2};
  const Merger m1[1] = {M1};
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = 0; y < 4; ++y)
      for (std::uint64_t r = 0; r < 2; ++r) {
        const BitString ys[1] = {bits(r, 1)};
        CHECK(iterated_compose_dp(two, m1, bits(x, n), bits(y, 2), ys) ==
              merger_compose(E1, E2, M1, bits(x, n), bits(y, 2), bits(r, 1)));
      }

  const SeededMap three[3] = {E1, E2, E3};
  const Merger m2[2] = {M1, M2};
  const auto inner = merger_composition(E1, E2, M1);
  const auto outer = merger_composition(inner, E3, M2);
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = 0; y < 4; ++y)
      for (std::uint64_t r = 0; r < 4; ++r) {
        const BitString ys[2] = {bits(r >> 1, 1), bits(r & 1, 1)};
        DpTrace trace;
        const auto got = iterated_compose_dp(three, m2, bits(x, n), bits(y, 2), ys, &trace);
        CHECK(got == outer(bits(x, n), bits(y, 2) + ys[0] + ys[1]));
        CHECK(trace.rows.size() == 3);
        CHECK(trace.rows[1][0] == inner(bits(x, n), bits(y, 2) + ys[0]));
      }

  const auto K1 = constant_map(n, 2, bits(3, 2)), K2 = constant_map(n, 2, bits(1, 2));
  const SeededMap consts[2] = {K1, K2};
  const BitString ys[1] = {bits(0, 1)};
  const auto expect = iterated_compose_dp(consts, m1, bits(0, n), bits(0, 2), ys);
  for (std::uint64_t x = 0; x < 8; ++x) CHECK(iterated_compose_dp(consts, m1, bits(x, n), bits(0, 2), ys) == expect);
}
