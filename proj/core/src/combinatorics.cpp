#include "msrlab/combinatorics.hpp"

#include <algorithm>

namespace msrlab {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::vector<std::vector<std::size_t>> subsets(const std::vector<std::size_t>& items, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  for_each_subset(items, m, [&](const std::vector<std::size_t>& s) { out.push_back(s); });
  return out;
}

std::vector<std::size_t> iota_nodes(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

std::vector<std::size_t> without(const std::vector<std::size_t>& items, const std::vector<std::size_t>& drop) {
  std::vector<std::size_t> out;
  for (auto v : items)
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
  return out;
}

}  // namespace msrlab
