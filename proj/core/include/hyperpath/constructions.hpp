#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

enum class ConstructionKind { Star, Core, StarPlus, Complete };

std::string_view to_string(ConstructionKind kind);
std::optional<ConstructionKind> parse_construction_kind(std::string_view name);

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::Star;
  int r = 3;
  int n = 0;
  // k for Star/StarPlus, s for Core, unused for Complete.
  int parameter = 0;
};

// Vertex layouts are fixed so serialized output is reproducible:
// the star set A is {0..k-1}; the core set S is {0..s-1}; the 2-core embedded
// by gen_star_plus sits on {k, k+1}.

// S_r(n,k): every r-set meeting A. Requires n >= r and 1 <= k < n.
Hypergraph gen_star(int r, int n, int k);
// C_r(n,s): every r-set containing S. Requires 1 <= s <= r <= n.
Hypergraph gen_core(int r, int n, int s);
// S_r^+(n,k): S_r(n,k) plus C_r(n-k,2) placed inside B. Requires n-k >= r, k >= 1.
Hypergraph gen_star_plus(int r, int n, int k);
// K_n^r. Requires n >= r.
Hypergraph gen_complete(int r, int n);

Hypergraph generate(const ConstructionSpec& spec);

// kn - k^2/2 - 3k/2, the minimum degree of S_3(n,k).
std::int64_t star_min_degree(std::int64_t n, std::int64_t k);
// One more than star_min_degree: the minimum degree of S_3^+(n,k).
std::int64_t star_plus_min_degree(std::int64_t n, std::int64_t k);

struct Threshold {
  std::int64_t min_degree = 0;  // δ_1 bound forcing a linear path of length t
  std::int64_t min_order = 0;   // smallest n the bound is stated for
};

// Minimum-degree bound that forces P_t, written t = 2k+1 or t = 2k+2:
//   odd:  kn + 6k^2 - 3k + 3   for n >= 4k + 19
//   even: kn + 6k^2 + 7k + 6   for n >= 4k + 21
Threshold theorem_threshold(std::int64_t n, std::int64_t t);

// g(n,t), quadratic reading (t >= 3):
//   odd:  (t-1)/2 n + 3/2 t^2 - 9/2 t + 6
//   even: (t-2)/2 n + 3/2 t^2 - 5/2 t + 6
// For odd t this coincides with theorem_threshold; for even t it is one larger.
std::int64_t g_bound(std::int64_t n, std::int64_t t);

}  // namespace hyperpath
