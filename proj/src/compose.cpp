#include "xtr/compose.hpp"

#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

#include "xtr/error.hpp"

namespace xtr {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw DimensionError(what);
}

std::string dims(const char* name, std::size_t got, std::size_t want) {
  return std::string(name) + " has " + std::to_string(got) + " bits, expected " + std::to_string(want);
}

std::vector<std::uint64_t> random_table(int in_bits, int out_bits, std::uint64_t seed) {
  if (in_bits < 0 || in_bits > 24) throw BudgetExceeded("random table above 2^24 entries");
  if (out_bits < 0 || out_bits > 63) throw DimensionError("random table output above 63 bits");
  std::mt19937_64 gen(seed);
  std::vector<std::uint64_t> table(std::size_t{1} << in_bits);
  for (auto& v : table) v = out_bits == 0 ? 0 : gen() >> (64 - out_bits);
  return table;
}

}  // namespace

BitString SeededMap::operator()(const BitString& x, const BitString& y) const {
  expect(x.size() <= static_cast<std::size_t>(n), "source longer than " + std::to_string(n) + " bits");
  expect(y.size() == static_cast<std::size_t>(d), dims("seed", y.size(), static_cast<std::size_t>(d)));
  auto out = eval(x, y);
  expect(out.size() == static_cast<std::size_t>(m), dims("map output", out.size(), static_cast<std::size_t>(m)));
  return out;
}

SeededMap seeded_map(const ExtractorFn& F) {
  return {F.n, F.d, F.m, [F](const BitString& x, const BitString& y) {
            return BitString::from_uint(F.eval(x.pad_front(static_cast<std::size_t>(F.n)).to_uint(), y.to_uint()),
                                        static_cast<std::size_t>(F.m));
          }};
}

ExtractorFn to_fn(const SeededMap& F) {
  if (F.n + F.d > 62 || F.m > 63) throw DimensionError("to_fn: map too wide for integer indices");
  ExtractorFn out;
  out.n = F.n;
  out.d = F.d;
  out.m = F.m;
  out.eval = [F](std::uint64_t x, std::uint64_t y) {
    return F(BitString::from_uint(x, static_cast<std::size_t>(F.n)), BitString::from_uint(y, static_cast<std::size_t>(F.d)))
        .to_uint();
  };
  return out;
}

SeededMap random_table_map(int n, int d, int m, std::uint64_t seed) {
  auto table = std::make_shared<std::vector<std::uint64_t>>(random_table(n + d, m, seed));
  ExtractorFn F;
  F.n = n;
  F.d = d;
  F.m = m;
  F.eval = [table, d](std::uint64_t x, std::uint64_t y) { return (*table)[(x << d) | y]; };
  return seeded_map(F);
}

SeededMap constant_map(int n, int d, const BitString& value) {
  return {n, d, static_cast<int>(value.size()), [value](const BitString&, const BitString&) { return value; }};
}

SeededMap compose_serial(const SeededMap& F1, const SeededMap& F2) {
  expect(F2.m == F1.d, "compose_serial: F2 output length " + std::to_string(F2.m) + " differs from F1 seed length " +
                           std::to_string(F1.d));
  const int n = F1.n + F2.n;
  return {n, F2.d, F1.m, [F1, F2, n](const BitString& x, const BitString& y) {
            const auto full = x.pad_front(static_cast<std::size_t>(n));
            const auto n1 = static_cast<std::size_t>(F1.n);
            return F1(full.prefix(n1), F2(full.substr(n1, static_cast<std::size_t>(F2.n)), y));
          }};
}

BlockVerdict check_block_source(const BlockSource& s, double tolerance) {
  expect(s.joint.bits() == s.n1 + s.n2, "block source joint has the wrong length");
  const std::uint64_t rows = std::uint64_t{1} << s.n1;
  const std::uint64_t cols = std::uint64_t{1} << s.n2;
  BlockVerdict v;
  double top = 0;
  for (std::uint64_t a = 0; a < rows; ++a) {
    double mass = 0, peak = 0;
    for (std::uint64_t b = 0; b < cols; ++b) {
      mass += s.joint[a * cols + b];
      peak = std::max(peak, s.joint[a * cols + b]);
    }
    top = std::max(top, mass);
    if (mass <= 0 || v.bad_x1) continue;
    const double h = -std::log2(peak / mass);
    if (h < s.k2 - tolerance) {
      v.bad_x1 = a;
      v.conditional_entropy = h;
    }
  }
  v.marginal_entropy = -std::log2(top);
  v.pass = !v.bad_x1 && v.marginal_entropy >= s.k1 - tolerance;
  return v;
}

SomewhereRandomSource::SomewhereRandomSource(int b, int k, std::vector<double> weights, double tolerance)
    : b_(b), k_(k), w_(std::move(weights)) {
  if (b < 1 || k < 1) throw std::invalid_argument("somewhere-random source needs b, k >= 1");
  if (b * k > kMaxDistBits) throw BudgetExceeded("somewhere-random source above the dense limit");
  expect(w_.size() == (std::size_t{1} << (b * k)) * static_cast<std::size_t>(b + 1),
         "somewhere-random weights need 2^{bk} (b + 1) entries");
  double total = 0;
  for (double p : w_) {
    if (p < 0) throw InvalidDistribution("negative weight");
    total += p;
  }
  if (std::abs(total - 1) > tolerance) throw InvalidDistribution("weights do not sum to 1");
}

Dist SomewhereRandomSource::joint_blocks() const {
  const std::size_t stride = static_cast<std::size_t>(b_ + 1);
  std::vector<double> p(w_.size() / stride, 0.0);
  for (std::size_t i = 0; i < w_.size(); ++i) p[i / stride] += w_[i];
  return Dist(b_ * k_, std::move(p));
}

double SomewhereRandomSource::selector_prob(int y) const {
  if (y < 0 || y > b_) throw std::out_of_range("selector outside [0, b]");
  double s = 0;
  for (std::size_t i = static_cast<std::size_t>(y); i < w_.size(); i += static_cast<std::size_t>(b_ + 1)) s += w_[i];
  return s;
}

double SomewhereRandomSource::block_distance(int i) const {
  if (i < 1 || i > b_) throw std::out_of_range("block index outside [1, b]");
  const double py = selector_prob(i);
  if (py <= 0) return 0;
  const std::uint64_t mask = (std::uint64_t{1} << k_) - 1;
  const int shift = (b_ - i) * k_;
  std::vector<double> cond(std::size_t{1} << k_, 0.0);
  const std::size_t stride = static_cast<std::size_t>(b_ + 1);
  for (std::size_t z = 0; z < w_.size() / stride; ++z) cond[(z >> shift) & mask] += w_[z * stride + static_cast<std::size_t>(i)];
  double sum = 0;
  const double u = 1.0 / static_cast<double>(cond.size());
  for (double c : cond) sum += std::abs(c / py - u);
  return sum / 2;
}

bool SomewhereRandomSource::satisfies(double eps, double eta, double tolerance) const {
  if (selector_prob(0) > eta + tolerance) return false;
  for (int i = 1; i <= b_; ++i)
    if (block_distance(i) > eps + tolerance) return false;
  return true;
}

BitString Merger::operator()(std::span<const BitString> z, const BitString& y) const {
  expect(z.size() == static_cast<std::size_t>(blocks),
         "merger expects " + std::to_string(blocks) + " blocks, got " + std::to_string(z.size()));
  for (const auto& b : z) expect(b.size() == static_cast<std::size_t>(k), dims("merger block", b.size(), static_cast<std::size_t>(k)));
  expect(y.size() == static_cast<std::size_t>(d), dims("merger seed", y.size(), static_cast<std::size_t>(d)));
  auto out = eval(z, y);
  expect(out.size() == static_cast<std::size_t>(m), dims("merger output", out.size(), static_cast<std::size_t>(m)));
  return out;
}

Merger two_block_merger(const SeededMap& E) {
  if (E.n % 2) throw DimensionError("two_block_merger needs an even source length");
  return {E.n / 2, 2, E.d, E.m, [E](std::span<const BitString> z, const BitString& y) { return E(z[0] + z[1], y); }};
}

Merger random_merger(int k, int blocks, int d, int m, std::uint64_t seed) {
  const auto E = random_table_map(k * blocks, d, m, seed);
  return {k, blocks, d, m, [E](std::span<const BitString> z, const BitString& y) { return E(concat(z), y); }};
}

Merger recursive_merger(const MergerFamily& family, int k, int levels) {
  if (levels < 0 || levels > 20) throw std::invalid_argument("recursive_merger: levels must lie in [0, 20]");
  if (levels == 0)
    return {k, 1, 0, k, [](std::span<const BitString> z, const BitString&) { return z[0]; }};

  // rounds[r] merges blocks of width[r] bits; round r reads seed segment levels - r.
  std::vector<Merger> rounds;
  int width = k;
  for (int r = 0; r < levels; ++r) {
    auto M = family(width);
    expect(M.blocks == 2 && M.k == width,
           "merger family returned a merger for " + std::to_string(M.blocks) + " blocks of " + std::to_string(M.k) +
               " bits, wanted 2 of " + std::to_string(width));
    width = M.m;
    rounds.push_back(std::move(M));
  }
  // Segment j (1-based) has the length of the round that consumes it.
  std::vector<int> offset(static_cast<std::size_t>(levels) + 1, 0);
  for (int j = 1; j <= levels; ++j)
    offset[static_cast<std::size_t>(j)] = offset[static_cast<std::size_t>(j - 1)] + rounds[static_cast<std::size_t>(levels - j)].d;

  const int blocks = 1 << levels;
  return {k, blocks, offset.back(), width, [rounds, offset, levels](std::span<const BitString> z, const BitString& y) {
            std::vector<BitString> cur(z.begin(), z.end());
            for (int r = 0; r < levels; ++r) {
              const int j = levels - r;
              const auto& M = rounds[static_cast<std::size_t>(r)];
              const auto seg = y.substr(static_cast<std::size_t>(offset[static_cast<std::size_t>(j - 1)]), static_cast<std::size_t>(M.d));
              std::vector<BitString> next;
              for (std::size_t i = 0; i + 1 < cur.size(); i += 2) {
                const BitString pair[2] = {cur[i], cur[i + 1]};
                next.push_back(M(pair, seg));
              }
              cur = std::move(next);
            }
            return cur[0];
          }};
}

namespace {

void check_merger_chain(const SeededMap& E1, const SeededMap& E2, const Merger& M) {
  expect(E1.n == E2.n, "composition needs equal source lengths");
  expect(E1.m >= E2.d, "E1 output shorter than E2 seed");
  expect(E2.m == M.k, "E2 output length differs from merger block length");
  expect(M.blocks == E1.n, "merger block count differs from source length");
}

std::vector<BitString> pad_blocks(std::vector<BitString> z, int blocks, int k) {
  z.insert(z.begin(), static_cast<std::size_t>(blocks) - z.size(), BitString(static_cast<std::size_t>(k)));
  return z;
}

}  // namespace

BitString merger_compose(const SeededMap& E1, const SeededMap& E2, const Merger& M, const BitString& a,
                         const BitString& r1, const BitString& r2, ComposeTrace* trace) {
  check_merger_chain(E1, E2, M);
  expect(a.size() <= static_cast<std::size_t>(E1.n), "source longer than n");
  const std::size_t len = a.size();
  std::vector<BitString> z;
  for (std::size_t i = 0; i < len; ++i) {
    const auto q = E1(a.substr(i, len - i), r1).prefix(static_cast<std::size_t>(E2.d));
    z.push_back(E2(a.prefix(i), q));
    if (trace) trace->q.push_back(q);
  }
  if (trace) trace->z = z;
  return M(pad_blocks(std::move(z), M.blocks, M.k), r2);
}

SeededMap merger_composition(const SeededMap& E1, const SeededMap& E2, const Merger& M) {
  check_merger_chain(E1, E2, M);
  return {E1.n, E1.d + M.d, M.m, [E1, E2, M](const BitString& x, const BitString& y) {
            return merger_compose(E1, E2, M, x, y.prefix(static_cast<std::size_t>(E1.d)),
                                  y.substr(static_cast<std::size_t>(E1.d), static_cast<std::size_t>(M.d)));
          }};
}

BitString iterated_compose_dp(std::span<const SeededMap> E, std::span<const Merger> M, const BitString& x,
                              const BitString& y, std::span<const BitString> ys, DpTrace* trace) {
  const std::size_t t = E.size();
  expect(t >= 1, "iterated composition needs at least one extractor");
  expect(M.size() == t - 1 && ys.size() == t - 1, "need t - 1 mergers and merger seeds");
  const int n = E[0].n;
  expect(x.size() >= 1 && x.size() <= static_cast<std::size_t>(n), "source length must lie in [1, n]");
  for (std::size_t j = 0; j + 1 < t; ++j) check_merger_chain(j == 0 ? E[0] : SeededMap{n, 0, M[j - 1].m, {}}, E[j + 1], M[j]);

  const std::size_t len = x.size();
  std::vector<BitString> row;
  for (std::size_t i = 0; i < len; ++i) row.push_back(E[0](x.substr(i, len - i), y));
  if (trace) trace->rows.push_back(row);

  for (std::size_t j = 0; j + 1 < t; ++j) {
    const auto& next_E = E[j + 1];
    std::vector<BitString> next(len);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t si = 0; si < static_cast<std::int64_t>(len); ++si) {
      const auto i = static_cast<std::size_t>(si);
      std::vector<BitString> z;
      for (std::size_t l = i; l < len; ++l)
        z.push_back(next_E(x.substr(i, l - i), row[l].prefix(static_cast<std::size_t>(next_E.d))));
      next[i] = M[j](pad_blocks(std::move(z), M[j].blocks, M[j].k), ys[j]);
    }
    row = std::move(next);
    if (trace) trace->rows.push_back(row);
  }
  return row[0];
}

}  // namespace xtr
