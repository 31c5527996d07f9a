// Wall-clock comparison of the OpenMP kernels against their serial
// references. Each row also checks that both give the same answer.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "xtr/ecc.hpp"
#include "xtr/hashext.hpp"
#include "xtr/parallel.hpp"
#include "xtr/randgraph.hpp"
#include "xtr/verify.hpp"

using namespace xtr;

namespace {

double seconds(const std::function<void()>& body, int reps = 3) {
  std::vector<double> t;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    body();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

template <class T>
void row(const char* name, const std::function<T()>& serial, const std::function<T()>& parallel,
         const std::function<bool(const T&, const T&)>& same) {
  T a{}, b{};
  const double ts = seconds([&] { a = serial(); });
  const double tp = seconds([&] { b = parallel(); });
  std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name, ts, tp, ts / tp, same(a, b) ? "same" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) set_threads(std::stoi(argv[1]));
  std::printf("threads: %d\n", thread_count());
  std::printf("%-34s %10s %10s %9s  %s\n", "kernel", "serial s", "parallel s", "speedup", "result");

  const auto G = sample_graph(256, 16, 64, 1);
  row<ExtractorVerdict>(
      "verify_extractor N=256 M=16 D=64", [&] { return verify_extractor_serial(G, 32, Rational(1, 5)); },
      [&] { return verify_extractor(G, 32, Rational(1, 5)); },
      [](auto& x, auto& y) { return x.pass == y.pass && x.B == y.B && x.A == y.A; });

  const auto sparse = sample_graph(128, 20, 12, 2);
  row<DisperserVerdict>(
      "verify_disperser N=128 M=20 D=12", [&] { return verify_disperser_serial(sparse, 16, Rational(1, 4)); },
      [&] { return verify_disperser(sparse, 16, Rational(1, 4)); },
      [](auto& x, auto& y) { return x.pass == y.pass && x.A == y.A && x.Y == y.Y; });

  const auto small = sample_graph(22, 8, 4, 3);
  row<WorstFlat>(
      "worst_flat_distance N=22 K=8", [&] { return worst_flat_distance_serial(small, 8, {std::uint64_t{1} << 22}); },
      [&] { return worst_flat_distance(small, 8, {std::uint64_t{1} << 22}); },
      [](auto& x, auto& y) { return x.A == y.A && x.l1_scaled == y.l1_scaled; });

  const ToeplitzFamily T(8, 3);
  row<CollisionSweep>(
      "collision_sweep n=8 l=3", [&] { return collision_sweep_serial(T); }, [&] { return collision_sweep(T); },
      [](auto& x, auto& y) { return x.pairs == y.pairs && x.min_hits == y.min_hits && x.max_hits == y.max_hits; });

  const auto code = build_code(12, Rational(1, 8));
  std::mt19937_64 rng(4);
  BitString center(static_cast<std::size_t>(code.length()));
  for (std::size_t i = 0; i < center.size(); ++i) center.set(i, rng() & 1);
  row<std::vector<BitString>>(
      "brute_list_decode n=12 delta=1/8", [&] { return brute_list_decode_serial(code, center, Rational(1, 8)); },
      [&] { return brute_list_decode(code, center, Rational(1, 8)); }, [](auto& x, auto& y) { return x == y; });
  return 0;
}
