#include "hyperpath/combinatorics.hpp"

namespace hyperpath {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

void for_each_subset(const std::vector<Vertex>& pool, int k,
                     const std::function<void(const std::vector<Vertex>&)>& visit) {
  const int size = static_cast<int>(pool.size());
  if (k < 0 || k > size) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<Vertex> subset(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) {
      subset[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    visit(subset);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == size - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace hyperpath
