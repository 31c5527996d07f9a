#include "xtr/muchnik.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "xtr/combinatorics.hpp"
#include "xtr/error.hpp"
#include "xtr/randgraph.hpp"

namespace xtr {

EnumerableSet::EnumerableSet(std::vector<std::uint32_t> order, std::uint64_t bound)
    : order_(std::move(order)), sorted_(order_), bound_(bound) {
  std::sort(sorted_.begin(), sorted_.end());
  if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end())
    throw std::invalid_argument("enumerable set lists an element twice");
  if (order_.size() > bound_)
    throw std::invalid_argument("enumerable set has " + std::to_string(order_.size()) + " elements, bound " +
                                std::to_string(bound_));
}

bool EnumerableSet::contains(std::uint32_t a) const { return std::binary_search(sorted_.begin(), sorted_.end(), a); }

BadSets compute_bad(const BipartiteGraph& G, const EnumerableSet& S, std::uint64_t K, BadRule rule) {
  if (S.size() > K) throw std::invalid_argument("compute_bad needs |S| <= K");
  const auto N = G.left_size();
  const auto M = G.right_size();
  const auto D = G.degree();
  BadSets out;
  out.rule = rule;
  out.load.assign(M, 0);
  for (auto a : S.order()) {
    if (a >= N) throw std::out_of_range("set member " + std::to_string(a) + " outside the left part");
    for (auto z : G.neighbors(a)) ++out.load[z];
  }
  const auto threshold = static_cast<unsigned __int128>(2) * D * K;
  out.right_bad.assign(M, 0);
  for (std::uint32_t z = 0; z < M; ++z)
    if (static_cast<unsigned __int128>(out.load[z]) * M > threshold) {
      out.right_bad[z] = 1;
      out.bad_right.push_back(z);
    }
  out.left_bad.assign(N, 0);
  for (auto a : S.order()) {
    std::uint32_t hits = 0;
    for (auto z : G.neighbors(a)) hits += out.right_bad[z];
    const bool bad = rule == BadRule::all ? hits == D : 2 * hits >= D;
    if (bad) {
      out.left_bad[a] = 1;
      out.bad_left.push_back(a);
    }
  }
  return out;
}

namespace {

// K left vertices with the most edges into T, ties to the smaller vertex.
std::vector<std::uint32_t> packed_set(const BipartiteGraph& G, const std::vector<char>& in_T, std::uint64_t K) {
  std::vector<std::uint32_t> hits(G.left_size(), 0);
  for (std::uint32_t a = 0; a < G.left_size(); ++a)
    for (auto z : G.neighbors(a)) hits[a] += in_T[z];
  std::vector<std::uint32_t> order(G.left_size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return hits[x] > hits[y]; });
  order.resize(K);
  return order;
}

}  // namespace

FortnowReport verify_fortnow(const BipartiteGraph& G, std::uint64_t K, Rational eps, std::uint64_t trials,
                             std::uint64_t seed, std::uint64_t adversarial, const Budget& budget) {
  if (K == 0 || K > G.left_size()) throw std::invalid_argument("verify_fortnow needs 1 <= K <= N");
  if (!certify_extractor(G, K, eps, budget))
    throw Infeasible("hypothesis unverified: graph is not a (" + std::to_string(K) + ", " + eps.str() + ") extractor");

  FortnowReport r;
  r.K = K;
  r.eps = eps;
  const auto p = static_cast<unsigned __int128>(eps.num);
  const auto q = static_cast<unsigned __int128>(eps.den);
  auto record = [&](std::vector<std::uint32_t> members) {
    const EnumerableSet S(std::move(members), K);
    const auto all = compute_bad(G, S, K, BadRule::all).bad_left.size();
    const auto maj = compute_bad(G, S, K, BadRule::majority).bad_left.size();
    r.max_bad_all = std::max(r.max_bad_all, all);
    r.max_bad_majority = std::max(r.max_bad_majority, maj);
    if (all * q > 2 * p * K) ++r.violations_all;
    if (maj * q > 4 * p * K) ++r.violations_majority;
    ++r.sets;
  };
  for (std::uint64_t t = 0; t < trials; ++t)
    record(random_subset(G.left_size(), static_cast<std::uint32_t>(K), trial_seed(seed, t)));
  const auto M = G.right_size();
  for (std::uint64_t t = 0; t < adversarial; ++t) {
    std::vector<char> in_T(M, 0);
    const std::uint64_t width = 1 + t % 3;
    for (std::uint64_t j = 0; j < width; ++j) in_T[(t * 7 + j) % M] = 1;
    record(packed_set(G, in_T, K));
  }
  return r;
}

std::vector<std::uint32_t> s_neighbors(const BipartiteGraph& G, const EnumerableSet& S, std::uint32_t X) {
  if (X >= G.right_size()) throw std::out_of_range("right vertex outside [M]");
  std::vector<std::uint32_t> out;
  for (auto a : S.order()) {
    const auto nb = G.neighbors(a);
    if (std::find(nb.begin(), nb.end(), X) != nb.end()) out.push_back(a);
  }
  return out;
}

std::uint32_t neighbor_rank(const BipartiteGraph& G, const EnumerableSet& S, std::uint32_t X, std::uint32_t A) {
  const auto list = s_neighbors(G, S, X);
  const auto it = std::find(list.begin(), list.end(), A);
  if (it == list.end()) throw std::invalid_argument("A is not an S-neighbor of X");
  return static_cast<std::uint32_t>(it - list.begin());
}

std::uint32_t decode(const BipartiteGraph& G, const EnumerableSet& S, std::uint32_t X, std::uint32_t idx) {
  const auto list = s_neighbors(G, S, X);
  if (idx >= list.size())
    throw std::out_of_range("index " + std::to_string(idx) + " but X has " + std::to_string(list.size()) +
                            " neighbors in S");
  return list[idx];
}

Encoding encode(const BipartiteGraph& G, const EnumerableSet& S, const BadSets& bad, std::uint32_t A) {
  if (!S.contains(A)) throw std::invalid_argument("encode: A is not in S");
  if (bad.is_bad_left(A)) throw NoGoodNeighbor("left vertex " + std::to_string(A) + " is bad");
  for (std::uint32_t y = 0; y < G.degree(); ++y) {
    const auto X = G.edge(A, y);
    if (!bad.right_bad[X]) return {X, y, neighbor_rank(G, S, X, A)};
  }
  throw NoGoodNeighbor("left vertex " + std::to_string(A) + " has no good neighbor");
}

BipartiteGraph level_graph(const BipartiteGraph& G, int k) {
  const int m = log2_exact(G.right_size());
  if (k < 0 || k > m) throw std::invalid_argument("condition length outside [0, m]");
  return G.truncated(m - k);
}

MultiEncoding encode_multi(const BipartiteGraph& G, std::span<const Condition> conditions, std::uint32_t A) {
  if (conditions.empty()) throw std::invalid_argument("encode_multi needs at least one condition");
  for (std::size_t i = 1; i < conditions.size(); ++i)
    if (conditions[i].k > conditions[i - 1].k) throw std::invalid_argument("condition lengths must be nonincreasing");
  const int m = log2_exact(G.right_size());
  const int k1 = conditions[0].k;

  std::vector<BipartiteGraph> graphs;
  std::vector<BadSets> bads;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    const auto& c = conditions[i];
    graphs.push_back(level_graph(G, c.k));
    bads.push_back(compute_bad(graphs.back(), c.S, std::uint64_t{1} << c.k, BadRule::majority));
    if (!c.S.contains(A)) throw std::invalid_argument("A is missing from condition " + std::to_string(i + 1));
    if (bads.back().is_bad_left(A))
      throw NoGoodNeighbor("A is bad at condition " + std::to_string(i + 1));
  }
  for (std::uint32_t y = 0; y < G.degree(); ++y) {
    const auto full = G.edge(A, y);
    bool ok = true;
    for (std::size_t i = 0; i < conditions.size() && ok; ++i) ok = !bads[i].right_bad[full >> (m - conditions[i].k)];
    if (!ok) continue;
    MultiEncoding e;
    e.X = full >> (m - k1);
    e.edge = y;
    for (std::size_t i = 0; i < conditions.size(); ++i) {
      const auto Xi = full >> (m - conditions[i].k);
      e.prefixes.push_back(Xi);
      e.indices.push_back(neighbor_rank(graphs[i], conditions[i].S, Xi, A));
    }
    return e;
  }
  throw Counterexample("left vertex " + std::to_string(A) +
                       " is good at every level but no edge is good at all levels at once");
}

ChainResult iterative_chain(std::span<const ChainLevel> levels, const EnumerableSet& S0) {
  ChainResult r;
  std::vector<std::uint32_t> current = S0.order();
  for (std::size_t i = 0; i < levels.size() && !current.empty(); ++i) {
    const auto& L = levels[i];
    r.sizes.push_back(current.size());
    if (current.size() > L.K) {
      r.size_bound_broken = true;
      break;
    }
    const EnumerableSet S(current, L.K);
    const auto bad = compute_bad(L.G, S, L.K, BadRule::all);
    for (auto a : current)
      if (!bad.is_bad_left(a)) r.assigned.push_back({a, static_cast<int>(i), encode(L.G, S, bad, a)});
    current = bad.bad_left;
  }
  r.unassigned = current;
  return r;
}

std::vector<int> chain_schedule(int n, int k) {
  if (n < 2 || k < 0) throw std::invalid_argument("chain_schedule needs n >= 2 and k >= 0");
  const double step = 2 * std::log2(static_cast<double>(n));
  const int levels = std::max(1, static_cast<int>(std::ceil(k / step - 1e-12)));
  const int drop = static_cast<int>(std::ceil(step - 1e-12));
  std::vector<int> out;
  for (int i = 0; i < levels; ++i) out.push_back(std::max(0, k - i * drop));
  return out;
}

}  // namespace xtr
