#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hyperpath/vertex_set.hpp"

namespace hyperpath {

// C(n, k); 0 when k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// Visits every k-subset of `pool` (in the pool's order) in lexicographic order
// of positions. The callback receives the subset in pool order.
void for_each_subset(const std::vector<Vertex>& pool, int k,
                     const std::function<void(const std::vector<Vertex>&)>& visit);

}  // namespace hyperpath
