#include "xtr/graph.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "xtr/combinatorics.hpp"
#include "xtr/error.hpp"

namespace xtr {

namespace {
constexpr std::uint64_t kMaxEdges = std::uint64_t{1} << 30;
}

BipartiteGraph::BipartiteGraph(std::uint32_t N, std::uint32_t M, std::uint32_t D,
                               std::vector<std::uint32_t> adjacency)
    : N_(N), M_(M), D_(D), adj_(std::move(adjacency)) {
  if (M == 0) throw std::invalid_argument("graph needs a nonempty right part");
  if (static_cast<std::uint64_t>(N) * D > kMaxEdges) throw BudgetExceeded("graph has too many edges");
  if (adj_.size() != static_cast<std::size_t>(N) * D)
    throw DimensionError("adjacency has " + std::to_string(adj_.size()) + " entries, expected N*D = " +
                         std::to_string(static_cast<std::uint64_t>(N) * D));
  for (std::size_t i = 0; i < adj_.size(); ++i)
    if (adj_[i] >= M)
      throw std::out_of_range("edge " + std::to_string(i % D) + " of left vertex " +
                              std::to_string(i / D) + " points outside [M]");
}

std::vector<std::uint32_t> BipartiteGraph::gamma(std::uint32_t a) const {
  auto nb = neighbors(a);
  std::vector<std::uint32_t> g(nb.begin(), nb.end());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

std::uint64_t BipartiteGraph::edge_count(std::span<const std::uint32_t> A,
                                         std::span<const std::uint32_t> B) const {
  std::vector<char> in_b(M_, 0);
  for (auto z : B) in_b.at(z) = 1;
  std::uint64_t count = 0;
  for (auto a : A)
    for (auto z : neighbors(a)) count += in_b[z];
  return count;
}

BipartiteGraph BipartiteGraph::truncated(int drop) const {
  if (!is_power_of_two(M_)) throw DimensionError("prefix truncation needs M a power of two");
  if (drop < 0 || drop > log2_exact(M_)) throw DimensionError("cannot drop more bits than m");
  std::vector<std::uint32_t> adj(adj_.size());
  std::transform(adj_.begin(), adj_.end(), adj.begin(), [drop](std::uint32_t z) { return z >> drop; });
  return {N_, M_ >> drop, D_, std::move(adj)};
}

BipartiteGraph graph_of_function(const ExtractorFn& F) {
  if (F.n > 30 || F.m > 31 || F.d > 30) throw BudgetExceeded("graph_of_function: map too large");
  const auto N = static_cast<std::uint32_t>(F.sources());
  const auto D = static_cast<std::uint32_t>(F.seeds());
  const auto M = static_cast<std::uint64_t>(F.outputs());
  if (static_cast<std::uint64_t>(N) * D > kMaxEdges) throw BudgetExceeded("graph_of_function: too many edges");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(N) * D);
  for (std::uint32_t x = 0; x < N; ++x)
    for (std::uint32_t y = 0; y < D; ++y) {
      const auto z = F.eval(x, y);
      if (z >= M)
        throw std::out_of_range("F(" + std::to_string(x) + "," + std::to_string(y) + ") = " +
                                std::to_string(z) + " is outside (m)");
      adj[static_cast<std::size_t>(x) * D + y] = static_cast<std::uint32_t>(z);
    }
  return {N, static_cast<std::uint32_t>(M), D, std::move(adj)};
}

ExtractorFn function_of_graph(const BipartiteGraph& G) {
  if (!is_power_of_two(G.left_size()) || !is_power_of_two(G.right_size()) ||
      !is_power_of_two(G.degree()))
    throw DimensionError("function_of_graph: N, M, D must be powers of two");
  // Shared copy keeps the map valid after G goes away.
  auto adj = std::make_shared<std::vector<std::uint32_t>>(G.adjacency().begin(), G.adjacency().end());
  const std::uint64_t D = G.degree();
  return {log2_exact(G.left_size()), log2_exact(G.degree()), log2_exact(G.right_size()),
          [adj, D](std::uint64_t x, std::uint64_t y) -> std::uint64_t { return (*adj)[x * D + y]; }};
}

}  // namespace xtr
