#include "xtr/dist.hpp"

#include "xtr/extractor_fn.hpp"

namespace xtr {

FlatSource::FlatSource(int bits, std::vector<std::uint64_t> elements)
    : n(bits), support(std::move(elements)) {
  std::sort(support.begin(), support.end());
  if (std::adjacent_find(support.begin(), support.end()) != support.end())
    throw std::invalid_argument("flat source support has duplicates");
  if (!support.empty() && bits < 64 && support.back() >> bits)
    throw DimensionError("flat source element outside {0,1}^n");
}

ExtractorFn ExtractorFn::truncated(int q) const {
  if (q < 0 || q > m) throw DimensionError("truncated: prefix longer than output");
  const int drop = m - q;
  auto inner = eval;
  return {n, d, q, [inner, drop](std::uint64_t x, std::uint64_t y) { return inner(x, y) >> drop; }};
}

}  // namespace xtr
