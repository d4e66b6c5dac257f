#include "hyperpath/oracle.hpp"

#include <cassert>
#include <string>

#include "hyperpath/combinatorics.hpp"
#include "hyperpath/error.hpp"

namespace hyperpath {

namespace {

void require_three_uniform(const Hypergraph& h) {
  if (h.uniformity() != 3) {
    throw Error(ErrorCode::NotPairUniform, "linear path search needs a 3-graph");
  }
}

std::uint64_t effective_budget(const Hypergraph& h, SearchLimits limits) {
  if (limits.max_nodes != 0) return limits.max_nodes;
  return h.order() <= 30 ? 0 : kLargeOrderNodeBudget;
}

struct DfsOptions {
  // Try both (x_0, x_1) orders of the first edge; only matters when x_0 is
  // distinguished (enumeration, cycles).
  bool start_both_orders = false;
  // Try both choices of x_{2t} in the last edge.
  bool end_both_orders = false;
  // Every connector x_2, x_4, ..., x_{2t} must exceed x_0 (cycle rotation
  // canonical form).
  bool connectors_above_start = false;
};

// Depth-first enumeration of linear t-paths. `Leaf` receives each complete
// vertex sequence and returns true to stop the search.
template <typename Leaf>
class PathDfs {
 public:
  PathDfs(const Hypergraph& h, std::size_t t, DfsOptions options, std::uint64_t budget, Leaf leaf)
      : h_(h), t_(t), options_(options), budget_(budget), leaf_(std::move(leaf)),
        used_(static_cast<std::size_t>(h.order()), 0) {
    seq_.reserve(2 * t + 1);
  }

  bool run() {
    for (std::size_t i = 0; i < h_.size(); ++i) {
      const auto e = h_.edge(i);
      // Connector choices c, b, a so the first candidate is (a, b, c) itself.
      for (int ci = 2; ci >= 0; --ci) {
        const Vertex connector = e[static_cast<std::size_t>(ci)];
        Vertex p = 0;
        Vertex q = 0;
        bool first = true;
        for (Vertex w : e) {
          if (w == connector) continue;
          (first ? p : q) = w;
          first = false;
        }
        if (try_start(p, q, connector)) return true;
        if (options_.start_both_orders && try_start(q, p, connector)) return true;
      }
    }
    return false;
  }

 private:
  void tick() {
    if (budget_ != 0 && ++nodes_ > budget_) {
      throw Error(ErrorCode::OracleBudget,
                  "search exceeded " + std::to_string(budget_) + " nodes");
    }
  }

  void push(Vertex v) {
    seq_.push_back(v);
    used_[v] = 1;
  }
  void pop() {
    used_[seq_.back()] = 0;
    seq_.pop_back();
  }

  bool try_start(Vertex x0, Vertex x1, Vertex x2) {
    if (options_.connectors_above_start && x2 <= x0) return false;
    tick();
    push(x0);
    push(x1);
    push(x2);
    const bool stop = t_ == 1 ? leaf_(seq_) : grow(1);
    pop();
    pop();
    pop();
    return stop;
  }

  bool place(Vertex mid, Vertex next, std::size_t placed) {
    if (options_.connectors_above_start && next <= seq_.front()) return false;
    tick();
    push(mid);
    push(next);
    const bool stop = placed + 1 == t_ ? leaf_(seq_) : grow(placed + 1);
    pop();
    pop();
    return stop;
  }

  bool grow(std::size_t placed) {
    const bool last = placed + 1 == t_;
    for (const auto& [a, b] : h_.link(seq_.back())) {
      if (used_[a] || used_[b]) continue;
      if (place(a, b, placed)) return true;
      if ((!last || options_.end_both_orders) && place(b, a, placed)) return true;
    }
    return false;
  }

  const Hypergraph& h_;
  std::size_t t_;
  DfsOptions options_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Leaf leaf_;
  std::vector<Vertex> seq_;
  std::vector<char> used_;
};

template <typename Leaf>
bool run_dfs(const Hypergraph& h, std::size_t t, DfsOptions options, SearchLimits limits,
             Leaf leaf) {
  PathDfs<Leaf> dfs(h, t, options, effective_budget(h, limits), std::move(leaf));
  return dfs.run();
}

// Smallest two common neighbours of (a, b) outside `seq`.
std::vector<Vertex> fresh_common_neighbours(const Hypergraph& h, Vertex a, Vertex b,
                                            const std::vector<Vertex>& seq, std::size_t want) {
  std::vector<Vertex> out;
  h.pair_neighborhood(a, b).for_each_outside(VertexSet::from_range(static_cast<std::size_t>(h.order()), seq),
                                             [&](Vertex w) {
                                               out.push_back(w);
                                               return out.size() >= want;
                                             });
  return out;
}

}  // namespace

std::optional<LinearPath> find_path(const Hypergraph& h, std::size_t t, SearchLimits limits) {
  require_three_uniform(h);
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "path length must be at least 1");
  if (static_cast<std::size_t>(h.order()) < 2 * t + 1 || h.size() < t) return std::nullopt;

  std::optional<LinearPath> found;
  run_dfs(h, t, DfsOptions{}, limits, [&](const std::vector<Vertex>& seq) {
    found.emplace(seq);
    return true;
  });
  assert(!found || is_valid_path(h, *found));
  return found;
}

LongestPath longest_path(const Hypergraph& h, std::size_t cap, SearchLimits limits) {
  require_three_uniform(h);
  if (cap < 1) throw Error(ErrorCode::InvalidParameter, "cap must be at least 1");
  LongestPath best;
  // Any t-1 consecutive edges of a t-path form a (t-1)-path, so the first
  // absent length ends the scan.
  for (std::size_t t = 1; t <= cap; ++t) {
    auto p = find_path(h, t, limits);
    if (!p) break;
    best.length = t;
    best.witness = std::move(p);
  }
  return best;
}

std::optional<LinearCycle> find_cycle(const Hypergraph& h, std::size_t k, SearchLimits limits) {
  require_three_uniform(h);
  if (k < 3) throw Error(ErrorCode::InvalidParameter, "cycle length must be at least 3");
  if (static_cast<std::size_t>(h.order()) < 2 * k || h.size() < k) return std::nullopt;

  std::optional<LinearCycle> found;
  DfsOptions options{.start_both_orders = true, .end_both_orders = true,
                     .connectors_above_start = true};
  run_dfs(h, k - 1, options, limits, [&](const std::vector<Vertex>& seq) {
    auto closing = fresh_common_neighbours(h, seq.back(), seq.front(), seq, 1);
    if (closing.empty()) return false;
    std::vector<Vertex> z = seq;
    z.push_back(closing.front());
    found = LinearCycle{std::move(z)};
    return true;
  });
  assert(!found || is_valid_cycle(h, *found));
  return found;
}

std::optional<CyclePlusWitness> find_cycle_plus(const Hypergraph& h, std::size_t k,
                                                SearchLimits limits) {
  require_three_uniform(h);
  if (k < 3) throw Error(ErrorCode::InvalidParameter, "cycle length must be at least 3");
  if (static_cast<std::size_t>(h.order()) < 2 * k + 1 || h.size() < k + 1) return std::nullopt;

  std::optional<CyclePlusWitness> found;
  DfsOptions options{.start_both_orders = true, .end_both_orders = true};
  run_dfs(h, k - 1, options, limits, [&](const std::vector<Vertex>& seq) {
    // Reversal maps witnesses onto witnesses; keep the orientation with x_0 < x_{2t}.
    if (seq.front() > seq.back()) return false;
    auto outside = fresh_common_neighbours(h, seq.front(), seq.back(), seq, 2);
    if (outside.size() < 2) return false;
    found = CyclePlusWitness{LinearPath(seq), outside[0], outside[1]};
    return true;
  });
  assert(!found || is_valid_cycle_plus(h, *found));
  return found;
}

std::vector<LinearPath> enumerate_paths(const Hypergraph& h, std::size_t t, std::size_t limit,
                                        SearchLimits limits) {
  require_three_uniform(h);
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "path length must be at least 1");
  std::vector<LinearPath> out;
  if (static_cast<std::size_t>(h.order()) < 2 * t + 1) return out;
  DfsOptions options{.start_both_orders = true, .end_both_orders = true};
  run_dfs(h, t, options, limits, [&](const std::vector<Vertex>& seq) {
    out.emplace_back(seq);
    return limit != 0 && out.size() >= limit;
  });
  return out;
}

std::uint64_t enumeration_mask_count(int n) {
  if (n > kMaxEnumerationOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "exhaustive enumeration is limited to n <= " + std::to_string(kMaxEnumerationOrder));
  }
  if (n < 3) throw Error(ErrorCode::InvalidParameter, "3-graphs need at least 3 vertices");
  return std::uint64_t{1} << binomial(n, 3);
}

std::uint64_t enumerate_hypergraphs(int n, const HypergraphFilter& filter,
                                    const HypergraphVisitor& visit) {
  return enumerate_hypergraphs(n, 0, enumeration_mask_count(n), filter, visit);
}

std::uint64_t enumerate_hypergraphs(int n, std::uint64_t first_mask, std::uint64_t last_mask,
                                    const HypergraphFilter& filter, const HypergraphVisitor& visit) {
  const std::uint64_t total = enumeration_mask_count(n);
  if (last_mask > total) last_mask = total;

  std::vector<Edge> triples;
  std::vector<Vertex> all;
  for (int v = 0; v < n; ++v) all.push_back(static_cast<Vertex>(v));
  for_each_subset(all, 3, [&](const std::vector<Vertex>& e) { triples.push_back(e); });

  std::uint64_t visited = 0;
  std::vector<Edge> edges;
  for (std::uint64_t mask = first_mask; mask < last_mask; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < triples.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(triples[i]);
    }
    const Hypergraph h = Hypergraph::build(3, n, edges);
    if (filter && !filter(h)) continue;
    ++visited;
    if (visit) visit(h);
  }
  return visited;
}

}  // namespace hyperpath
