#include "hyperpath/constructions.hpp"

#include <numeric>
#include <vector>

#include "hyperpath/combinatorics.hpp"
#include "hyperpath/error.hpp"

namespace hyperpath {

namespace {

std::vector<Vertex> iota_vertices(int from, int to) {
  std::vector<Vertex> out;
  for (int v = from; v < to; ++v) out.push_back(static_cast<Vertex>(v));
  return out;
}

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidParameter, what);
}

std::string params(int r, int n, int x) {
  return " (r=" + std::to_string(r) + ", n=" + std::to_string(n) + ", " + std::to_string(x) + ")";
}

void require_uniformity(int r) {
  if (r < 2) invalid("uniformity must be at least 2, got " + std::to_string(r));
}

}  // namespace

std::string_view to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::Star: return "star";
    case ConstructionKind::Core: return "core";
    case ConstructionKind::StarPlus: return "star_plus";
    case ConstructionKind::Complete: return "complete";
  }
  return "unknown";
}

std::optional<ConstructionKind> parse_construction_kind(std::string_view name) {
  if (name == "star") return ConstructionKind::Star;
  if (name == "core") return ConstructionKind::Core;
  if (name == "star_plus" || name == "star-plus") return ConstructionKind::StarPlus;
  if (name == "complete") return ConstructionKind::Complete;
  return std::nullopt;
}

Hypergraph gen_star(int r, int n, int k) {
  require_uniformity(r);
  if (n < r || k < 1 || k >= n) invalid("star needs n >= r and 1 <= k < n" + params(r, n, k));
  std::vector<Edge> edges;
  for_each_subset(iota_vertices(0, n), r, [&](const std::vector<Vertex>& e) {
    // Subsets are sorted, so meeting A = {0..k-1} means the smallest is in A.
    if (e.front() < static_cast<Vertex>(k)) edges.push_back(e);
  });
  return Hypergraph::build(r, n, edges);
}

Hypergraph gen_core(int r, int n, int s) {
  require_uniformity(r);
  if (s < 1 || s > r || r > n) invalid("core needs 1 <= s <= r <= n" + params(r, n, s));
  const auto core = iota_vertices(0, s);
  std::vector<Edge> edges;
  for_each_subset(iota_vertices(s, n), r - s, [&](const std::vector<Vertex>& rest) {
    Edge e = core;
    e.insert(e.end(), rest.begin(), rest.end());
    edges.push_back(std::move(e));
  });
  return Hypergraph::build(r, n, edges);
}

Hypergraph gen_star_plus(int r, int n, int k) {
  require_uniformity(r);
  if (k < 1 || n - k < r) invalid("star_plus needs k >= 1 and n - k >= r" + params(r, n, k));
  std::vector<Edge> edges = gen_star(r, n, k).edges();
  const Vertex a = static_cast<Vertex>(k);
  const Vertex b = static_cast<Vertex>(k + 1);
  for_each_subset(iota_vertices(k + 2, n), r - 2, [&](const std::vector<Vertex>& rest) {
    Edge e{a, b};
    e.insert(e.end(), rest.begin(), rest.end());
    edges.push_back(std::move(e));
  });
  return Hypergraph::build(r, n, edges);
}

Hypergraph gen_complete(int r, int n) {
  require_uniformity(r);
  if (n < r) invalid("complete needs n >= r" + params(r, n, 0));
  std::vector<Edge> edges;
  for_each_subset(iota_vertices(0, n), r, [&](const std::vector<Vertex>& e) { edges.push_back(e); });
  return Hypergraph::build(r, n, edges);
}

Hypergraph generate(const ConstructionSpec& spec) {
  switch (spec.kind) {
    case ConstructionKind::Star: return gen_star(spec.r, spec.n, spec.parameter);
    case ConstructionKind::Core: return gen_core(spec.r, spec.n, spec.parameter);
    case ConstructionKind::StarPlus: return gen_star_plus(spec.r, spec.n, spec.parameter);
    case ConstructionKind::Complete: return gen_complete(spec.r, spec.n);
  }
  invalid("unknown construction kind");
}

std::int64_t star_min_degree(std::int64_t n, std::int64_t k) {
  const std::int64_t twice = 2 * k * n - k * k - 3 * k;
  if (twice % 2 != 0) {
    throw Error(ErrorCode::NonIntegral, "kn - k^2/2 - 3k/2 is not an integer for n=" +
                                            std::to_string(n) + ", k=" + std::to_string(k));
  }
  return twice / 2;
}

std::int64_t star_plus_min_degree(std::int64_t n, std::int64_t k) {
  return star_min_degree(n, k) + 1;
}

Threshold theorem_threshold(std::int64_t n, std::int64_t t) {
  if (t < 1) throw Error(ErrorCode::InvalidParameter, "path length must be at least 1");
  if (t % 2 == 1) {
    const std::int64_t k = (t - 1) / 2;
    return {k * n + 6 * k * k - 3 * k + 3, 4 * k + 19};
  }
  const std::int64_t k = (t - 2) / 2;
  return {k * n + 6 * k * k + 7 * k + 6, 4 * k + 21};
}

std::int64_t g_bound(std::int64_t n, std::int64_t t) {
  if (t < 3) throw Error(ErrorCode::InvalidParameter, "g(n,t) is defined for t >= 3");
  // Twice the value is integral; both numerators below are always even.
  const std::int64_t twice = (t % 2 == 1) ? (t - 1) * n + 3 * t * t - 9 * t + 12
                                          : (t - 2) * n + 3 * t * t - 5 * t + 12;
  return twice / 2;
}

}  // namespace hyperpath
