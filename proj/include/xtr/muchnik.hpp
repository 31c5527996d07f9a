#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "xtr/graph.hpp"
#include "xtr/rational.hpp"
#include "xtr/verify.hpp"

namespace xtr {

/// Finite left-vertex set with a fixed enumeration order and a size bound.
/// Stands in for the set of words of bounded conditional complexity: the
/// arguments below only use that it can be listed and is not too large.
class EnumerableSet {
 public:
  EnumerableSet(std::vector<std::uint32_t> order, std::uint64_t bound);

  const std::vector<std::uint32_t>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  std::uint64_t bound() const { return bound_; }
  bool contains(std::uint32_t a) const;

 private:
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> sorted_;
  std::uint64_t bound_;
};

enum class BadRule { all, majority };

struct BadSets {
  BadRule rule = BadRule::all;
  std::vector<std::uint64_t> load;     ///< edges from S into each right vertex
  std::vector<char> right_bad;         ///< load * M > 2 D K
  std::vector<std::uint32_t> bad_right;
  std::vector<std::uint32_t> bad_left; ///< in the enumeration order of S
  std::vector<char> left_bad;          ///< indexed by left vertex

  bool is_bad_left(std::uint32_t a) const { return left_bad[a] != 0; }
};

/// Right vertex z is bad when more than 2DK/M edges from S land on it
/// (counted with multiplicity). A member of S is bad when all D of its edges
/// end in bad vertices (BadRule::all) or at least D/2 of them do
/// (BadRule::majority). Needs |S| <= K.
BadSets compute_bad(const BipartiteGraph& G, const EnumerableSet& S, std::uint64_t K, BadRule rule);

struct FortnowReport {
  std::uint64_t K = 0;
  Rational eps;
  std::uint64_t sets = 0;           ///< random plus adversarial sets examined
  std::size_t max_bad_all = 0;
  std::size_t max_bad_majority = 0;
  std::uint64_t violations_all = 0;       ///< sets with |bad_left(all)| > 2 eps K
  std::uint64_t violations_majority = 0;  ///< sets with |bad_left(majority)| > 4 eps K

  bool pass() const { return violations_all == 0 && violations_majority == 0; }
};

/// Checks the bad-set size bounds on `trials` random K-sets and
/// `adversarial` sets packed onto few right vertices. Throws Infeasible when
/// G is not certified as a (K, eps) extractor.
FortnowReport verify_fortnow(const BipartiteGraph& G, std::uint64_t K, Rational eps, std::uint64_t trials,
                             std::uint64_t seed, std::uint64_t adversarial = 10, const Budget& budget = {});

/// A left vertex with no usable right neighbor.
class NoGoodNeighbor : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Encoding {
  std::uint32_t X = 0;      ///< right vertex
  std::uint32_t edge = 0;   ///< which of A's D edges reaches X
  std::uint32_t index = 0;  ///< rank of A among X's neighbors in S
};

/// Least-index edge of A ending in a good right vertex.
Encoding encode(const BipartiteGraph& G, const EnumerableSet& S, const BadSets& bad, std::uint32_t A);

/// Members of S adjacent to X, in enumeration order.
std::vector<std::uint32_t> s_neighbors(const BipartiteGraph& G, const EnumerableSet& S, std::uint32_t X);
std::uint32_t neighbor_rank(const BipartiteGraph& G, const EnumerableSet& S, std::uint32_t X, std::uint32_t A);
/// The idx-th member of S adjacent to X.
std::uint32_t decode(const BipartiteGraph& G, const EnumerableSet& S, std::uint32_t X, std::uint32_t idx);

struct Condition {
  EnumerableSet S;
  int k = 0;  ///< level i uses the k-bit output prefix and K = 2^k
};

struct MultiEncoding {
  std::uint32_t X = 0;  ///< k_1-bit right vertex
  std::uint32_t edge = 0;
  std::vector<std::uint32_t> prefixes;  ///< X truncated to k_i bits
  std::vector<std::uint32_t> indices;   ///< rank of A at each level
};

/// No common good neighbor exists although A is good at every level.
class Counterexample : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// G is a prefix-extractor graph with M = 2^m. Conditions come with
/// k_1 >= ... >= k_p, k_1 <= m. Level i looks at G truncated to k_i output
/// bits with S_i, K = 2^{k_i} and the majority rule. Returns the least-index
/// edge of A whose endpoint has every prefix good, cut to k_1 bits.
MultiEncoding encode_multi(const BipartiteGraph& G, std::span<const Condition> conditions, std::uint32_t A);

/// Level graph of encode_multi for condition k.
BipartiteGraph level_graph(const BipartiteGraph& G, int k);

struct ChainLevel {
  BipartiteGraph G;
  std::uint64_t K = 0;
};

struct ChainAssignment {
  std::uint32_t A = 0;
  int level = 0;
  Encoding code;
};

struct ChainResult {
  std::vector<ChainAssignment> assigned;  ///< grouped by level, enumeration order inside
  std::vector<std::size_t> sizes;         ///< |S^i| for every level visited
  std::vector<std::uint32_t> unassigned;  ///< left over when the levels run out
  bool size_bound_broken = false;         ///< some |S^i| exceeded K_i
};

/// S^0 = S, S^{i+1} = bad_left(S^i) under BadRule::all on level i's graph.
/// Members good at level i are encoded there.
ChainResult iterative_chain(std::span<const ChainLevel> levels, const EnumerableSet& S0);

/// k_i = max(0, k - i ceil(2 log2 n)) for i < ceil(k / (2 log2 n)).
std::vector<int> chain_schedule(int n, int k);

}  // namespace xtr
