#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hyperpath/hypergraph.hpp"
#include "hyperpath/linear_path.hpp"

namespace hyperpath {

// Node budget for the exhaustive searches. max_nodes == 0 selects the default:
// unlimited for n <= 30, kLargeOrderNodeBudget above. Running out throws
// Error{OracleBudget} instead of reporting a possibly wrong "absent".
struct SearchLimits {
  std::uint64_t max_nodes = 0;
};

inline constexpr std::uint64_t kLargeOrderNodeBudget = std::uint64_t{1} << 31;

// Exact search for a linear path of length t (3-graphs only). Depth-first,
// extending at the right end through the last connector. The witness is the
// first one met in the fixed expansion order (edges lexicographically, then
// connector choice, then link pairs lexicographically), hence deterministic.
std::optional<LinearPath> find_path(const Hypergraph& h, std::size_t t, SearchLimits limits = {});

struct LongestPath {
  std::size_t length = 0;
  std::optional<LinearPath> witness;
};

// Largest t <= cap admitting a linear path, with a witness; (0, none) for an
// edgeless hypergraph.
LongestPath longest_path(const Hypergraph& h, std::size_t cap, SearchLimits limits = {});

// Linear k-cycle, k >= 3. The witness starts at its smallest connector.
std::optional<LinearCycle> find_cycle(const Hypergraph& h, std::size_t k, SearchLimits limits = {});

// C_k^+ (k >= 3): a linear (k-1)-path whose endpoints have two common
// neighbours off the path.
std::optional<CyclePlusWitness> find_cycle_plus(const Hypergraph& h, std::size_t k,
                                                SearchLimits limits = {});

// Every vertex sequence that is a linear t-path, both orientations and both
// orders of the free end vertices included, up to `limit` paths (0 = all).
std::vector<LinearPath> enumerate_paths(const Hypergraph& h, std::size_t t, std::size_t limit = 0,
                                        SearchLimits limits = {});

inline constexpr int kMaxEnumerationOrder = 6;

using HypergraphFilter = std::function<bool(const Hypergraph&)>;
using HypergraphVisitor = std::function<void(const Hypergraph&)>;

// Number of enumeration masks on n vertices, 2^C(n,3); bit i of a mask
// selects the i-th triple in lexicographic order.
std::uint64_t enumeration_mask_count(int n);

// Visits every labeled simple 3-graph on n <= 6 vertices accepted by `filter`
// (null = all) exactly once; returns how many were visited. Throws
// Error{OrderTooLarge} for n > 6 and Error{InvalidParameter} for n < 3.
std::uint64_t enumerate_hypergraphs(int n, const HypergraphFilter& filter,
                                    const HypergraphVisitor& visit);

// Same, restricted to masks in [first_mask, last_mask); used to split the
// space between workers.
std::uint64_t enumerate_hypergraphs(int n, std::uint64_t first_mask, std::uint64_t last_mask,
                                    const HypergraphFilter& filter, const HypergraphVisitor& visit);

}  // namespace hyperpath
