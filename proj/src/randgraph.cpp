#include "xtr/randgraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "xtr/combinatorics.hpp"
#include "xtr/error.hpp"

namespace xtr {

std::string to_string(PropertyKind kind) {
  switch (kind) {
    case PropertyKind::disperser: return "disperser";
    case PropertyKind::extractor: return "extractor";
    case PropertyKind::prefix: return "prefix";
  }
  return "?";
}

PropertyKind parse_property_kind(const std::string& name) {
  if (name == "disperser") return PropertyKind::disperser;
  if (name == "extractor") return PropertyKind::extractor;
  if (name == "prefix") return PropertyKind::prefix;
  throw std::invalid_argument("unknown property kind '" + name + "'");
}

void ExistenceParams::validate() const {
  if (!(1 < K && K <= N)) throw std::invalid_argument("need 1 < K <= N");
  if (M == 0) throw std::invalid_argument("need M > 0");
  if (!(Rational(0) < eps) || !(eps < Rational(1))) throw std::invalid_argument("need 0 < eps < 1");
  if (kind == PropertyKind::prefix && (!is_power_of_two(N) || !is_power_of_two(M) || !is_power_of_two(K)))
    throw std::invalid_argument("prefix kind needs N, M, K powers of two");
}

namespace {

std::uint64_t guarded_ceil(double v) {
  const double r = std::round(v);
  if (std::abs(v - r) <= 1e-9) return static_cast<std::uint64_t>(r) + 1;
  return static_cast<std::uint64_t>(std::ceil(v));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Rejection sampling keeps the draw identical on every standard library,
// unlike std::uniform_int_distribution.
std::uint32_t uniform_below(std::mt19937_64& rng, std::uint32_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return static_cast<std::uint32_t>(v % bound);
  }
}

}  // namespace

std::uint64_t degree_bound(const ExistenceParams& p) {
  p.validate();
  const double N = static_cast<double>(p.N);
  const double M = static_cast<double>(p.M);
  const double K = static_cast<double>(p.K);
  const double eps = p.eps.value();
  const double ln2 = std::log(2.0);
  switch (p.kind) {
    case PropertyKind::disperser:
      return guarded_ceil(M / K * (std::log(1 / eps) + 1) + 1 / eps * (std::log(N / K) + 1));
    case PropertyKind::extractor:
      return guarded_ceil(std::max(M / K * ln2 / (eps * eps), 1 / (eps * eps) * (std::log(N / K) + 1)));
    case PropertyKind::prefix: {
      const double v = std::max(M / K * ln2 / (eps * eps), 1 / (eps * eps) * (1 + ln2 + std::log(N)));
      return std::uint64_t{1} << guarded_ceil(std::log2(v));
    }
  }
  return 0;
}

BipartiteGraph sample_graph(std::uint32_t N, std::uint32_t M, std::uint32_t D, std::uint64_t seed) {
  if (M == 0) throw std::invalid_argument("sample_graph: M must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(N) * D);
  for (auto& z : adj) z = uniform_below(rng, M);
  return {N, M, D, std::move(adj)};
}

std::vector<std::uint32_t> random_subset(std::uint32_t N, std::uint32_t K, std::uint64_t seed) {
  if (K > N) throw std::invalid_argument("random_subset: K exceeds N");
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> pool(N);
  std::iota(pool.begin(), pool.end(), 0u);
  for (std::uint32_t i = 0; i < K; ++i) std::swap(pool[i], pool[i + uniform_below(rng, N - i)]);
  pool.resize(K);
  return pool;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) + index);
}

namespace {

std::string join(const std::vector<std::uint32_t>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

TrialResult run_trial(const ExistenceParams& p, std::uint64_t D, std::uint64_t index, std::uint64_t seed,
                      const Budget& budget) {
  TrialResult r;
  r.index = index;
  r.seed = trial_seed(seed, index);
  const auto G = sample_graph(static_cast<std::uint32_t>(p.N), static_cast<std::uint32_t>(p.M),
                              static_cast<std::uint32_t>(D), r.seed);
  switch (p.kind) {
    case PropertyKind::disperser: {
      const auto v = verify_disperser(G, p.K, p.eps, budget);
      r.pass = v.pass;
      if (!v.pass) r.witness = "A=" + join(v.A) + " Y=" + join(v.Y);
      break;
    }
    case PropertyKind::extractor: {
      const auto v = verify_extractor(G, p.K, p.eps, budget);
      r.pass = v.pass;
      if (!v.pass) r.witness = "B=" + join(v.B) + " A=" + join(v.A) + " E=" + std::to_string(v.edges);
      break;
    }
    case PropertyKind::prefix: {
      const auto v = verify_prefix_extractor(G, log2_exact(p.K), p.eps, budget);
      r.pass = v.pass;
      if (!v.pass)
        r.witness = "level=" + std::to_string(v.level) + " B=" + join(v.detail.B) + " A=" + join(v.detail.A);
      break;
    }
  }
  return r;
}

}  // namespace

ExistenceReport existence_trial(const ExistenceParams& p, std::uint64_t trials, std::uint64_t seed,
                                const Budget& budget, std::optional<std::uint64_t> degree) {
  p.validate();
  if (p.kind == PropertyKind::prefix && log2_exact(p.K) > log2_exact(p.M))
    throw std::invalid_argument("prefix kind needs K <= M");
  ExistenceReport report;
  report.params = p;
  report.D = degree ? *degree : degree_bound(p);
  if (report.D > (1u << 24)) throw BudgetExceeded("existence_trial: degree too large");
  report.trials.resize(trials);
  // Verifier kernels are themselves parallel; trials stay sequential so the
  // report order is the trial order.
  for (std::uint64_t i = 0; i < trials; ++i) report.trials[i] = run_trial(p, report.D, i, seed, budget);
  const auto passed = std::count_if(report.trials.begin(), report.trials.end(), [](auto& t) { return t.pass; });
  report.pass_fraction = trials ? static_cast<double>(passed) / static_cast<double>(trials) : 0.0;
  return report;
}

}  // namespace xtr
