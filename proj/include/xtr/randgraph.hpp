#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xtr/graph.hpp"
#include "xtr/rational.hpp"
#include "xtr/verify.hpp"

namespace xtr {

enum class PropertyKind { disperser, extractor, prefix };

std::string to_string(PropertyKind kind);
PropertyKind parse_property_kind(const std::string& name);

/// Parameter tuple (N, M, K, eps) of the probabilistic existence bounds.
struct ExistenceParams {
  std::uint64_t N = 0;
  std::uint64_t M = 0;
  std::uint64_t K = 0;
  Rational eps;
  PropertyKind kind = PropertyKind::extractor;

  void validate() const;
};

/// Left degree D at which a random graph has the property with positive
/// probability:
///   disperser  ceil(M/K (ln(1/eps) + 1) + 1/eps (ln(N/K) + 1))
///   extractor  ceil(max(M/K ln2/eps^2, 1/eps^2 (ln(N/K) + 1)))
///   prefix     2^ceil(log2 max(M/K ln2/eps^2, 1/eps^2 (1 + ln2 + ln N)))
/// A value within 1e-9 of an integer is bumped past it.
std::uint64_t degree_bound(const ExistenceParams& p);

/// Every endpoint uniform over [M], drawn from a mt19937_64 seeded with `seed`.
BipartiteGraph sample_graph(std::uint32_t N, std::uint32_t M, std::uint32_t D, std::uint64_t seed);

/// K distinct elements of [N] in draw order (partial Fisher-Yates over a
/// mt19937_64 seeded with `seed`).
std::vector<std::uint32_t> random_subset(std::uint32_t N, std::uint32_t K, std::uint64_t seed);

/// Seed of trial `index` of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

struct TrialResult {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  bool pass = false;
  std::string witness;  ///< empty on pass
};

struct ExistenceReport {
  ExistenceParams params;
  std::uint64_t D = 0;
  std::vector<TrialResult> trials;
  double pass_fraction = 0;
};

/// Samples `trials` graphs with D = degree_bound(p) (or `degree` when given)
/// and runs the matching exact verifier on each.
ExistenceReport existence_trial(const ExistenceParams& p, std::uint64_t trials, std::uint64_t seed,
                                const Budget& budget = {},
                                std::optional<std::uint64_t> degree = std::nullopt);

}  // namespace xtr
