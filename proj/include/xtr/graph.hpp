#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xtr/extractor_fn.hpp"

namespace xtr {

/// Left part [N], right part [M], exactly D ordered edges per left vertex.
/// Multi-edges are allowed; edge order is the seed order of the function the
/// graph came from.
class BipartiteGraph {
 public:
  BipartiteGraph(std::uint32_t N, std::uint32_t M, std::uint32_t D,
                 std::vector<std::uint32_t> adjacency);

  std::uint32_t left_size() const { return N_; }
  std::uint32_t right_size() const { return M_; }
  std::uint32_t degree() const { return D_; }

  std::span<const std::uint32_t> neighbors(std::uint32_t a) const {
    return {adj_.data() + static_cast<std::size_t>(a) * D_, D_};
  }
  std::uint32_t edge(std::uint32_t a, std::uint32_t y) const {
    return adj_[static_cast<std::size_t>(a) * D_ + y];
  }
  std::span<const std::uint32_t> adjacency() const { return adj_; }

  /// Γ(a): distinct neighbors, sorted.
  std::vector<std::uint32_t> gamma(std::uint32_t a) const;
  /// |E(A, B)| counted with edge multiplicity.
  std::uint64_t edge_count(std::span<const std::uint32_t> A, std::span<const std::uint32_t> B) const;

  /// Same left part and edge order, right vertices mapped to their first
  /// (m - drop) bits. Requires M to be a power of two with drop <= log2 M.
  BipartiteGraph truncated(int drop) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::uint32_t N_, M_, D_;
  std::vector<std::uint32_t> adj_;
};

/// Left vertex x gets edges [F(x, 0), F(x, 1), ...] in seed order.
BipartiteGraph graph_of_function(const ExtractorFn& F);

/// Reads the graph back as an evaluation map. Needs N, M, D powers of two.
ExtractorFn function_of_graph(const BipartiteGraph& G);

}  // namespace xtr
