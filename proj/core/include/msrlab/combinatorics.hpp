#pragma once

#include <cstddef>
#include <cstdint>
#include <type_traits>
#include <vector>

namespace msrlab {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Calls fn(const std::vector<std::size_t>&) for every m-subset of the given
/// items, in lexicographic order of positions. fn may return false to stop.
template <typename Fn>
void for_each_subset(const std::vector<std::size_t>& items, std::size_t m, Fn&& fn) {
  const std::size_t n = items.size();
  if (m > n) return;
  std::vector<std::size_t> pos(m), pick(m);
  for (std::size_t i = 0; i < m; ++i) pos[i] = i;
  while (true) {
    for (std::size_t i = 0; i < m; ++i) pick[i] = items[pos[i]];
    if constexpr (std::is_same_v<decltype(fn(pick)), bool>) {
      if (!fn(pick)) return;
    } else {
      fn(pick);
    }
    std::size_t i = m;
    while (i > 0 && pos[i - 1] == n - m + i - 1) --i;
    if (i == 0) return;
    ++pos[i - 1];
    for (std::size_t j = i; j < m; ++j) pos[j] = pos[j - 1] + 1;
  }
}

/// All m-subsets of items in the order for_each_subset visits them.
std::vector<std::vector<std::size_t>> subsets(const std::vector<std::size_t>& items, std::size_t m);

/// 0, 1, ..., n-1.
std::vector<std::size_t> iota_nodes(std::size_t n);

/// items with the listed values removed.
std::vector<std::size_t> without(const std::vector<std::size_t>& items, const std::vector<std::size_t>& drop);

}  // namespace msrlab
