#pragma once

// Test-side reference implementations. They work on raw triple lists and use
// none of the library's search, validation or neighbourhood code.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "hyperpath/hypergraph.hpp"

namespace brute {

using Triple = std::array<int, 3>;

struct Graph {
  int n = 0;
  std::set<Triple> edges;

  bool has(int a, int b, int c) const;
  int degree(int v) const;
  int min_degree() const;
};

Graph from(const hyperpath::Hypergraph& h);
hyperpath::Hypergraph to_hypergraph(const Graph& g);

// Each triple of [0, n) independently with probability p.
Graph random_graph(int n, double p, std::mt19937_64& rng);

// Sequence checks written straight from the definitions.
bool is_linear_path(const Graph& g, const std::vector<int>& seq);
bool is_linear_cycle(const Graph& g, const std::vector<int>& seq);
bool is_cycle_plus(const Graph& g, const std::vector<int>& path, int closing, int parallel);

// Exhaustive search over injective vertex sequences x_0..x_{2t}.
std::optional<std::vector<int>> find_path(const Graph& g, std::size_t t);
std::size_t longest_path(const Graph& g);
bool has_cycle(const Graph& g, std::size_t k);
bool has_cycle_plus(const Graph& g, std::size_t k);

// |{w outside the path : {seq[a], seq[b], w} in E}|
std::size_t dp(const Graph& g, const std::vector<int>& seq, std::size_t a, std::size_t b);
// { i : dp(2i, 2i+2) >= 2 }
std::vector<std::size_t> m_set(const Graph& g, const std::vector<int>& seq);

std::vector<int> to_ints(const std::vector<hyperpath::Vertex>& seq);
template <class Span>
std::vector<int> to_ints(const Span& seq) {
  return std::vector<int>(seq.begin(), seq.end());
}

}  // namespace brute
