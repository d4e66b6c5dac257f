#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperpath/vertex_set.hpp"

namespace hyperpath {

using Edge = std::vector<Vertex>;

// Immutable simple r-uniform hypergraph on vertices 0..n-1.
//
// Edges are kept sorted ascending internally and the edge list is kept in
// lexicographic order. All indices are built once in build(); afterwards the
// value is read-only and may be shared freely between threads.
class Hypergraph {
 public:
  // Throws Error{EdgeArity, VertexOutOfRange, RepeatedVertexInEdge,
  // DuplicateEdge, InvalidParameter}. Vertex tuples may be given in any order.
  static Hypergraph build(int r, int n, const std::vector<Edge>& edges);

  int uniformity() const noexcept { return r_; }
  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> edge(std::size_t index) const {
    return {flat_.data() + index * static_cast<std::size_t>(r_), static_cast<std::size_t>(r_)};
  }
  std::vector<Edge> edges() const;

  // Edge indices containing v, ascending.
  std::span<const std::uint32_t> incident_edges(Vertex v) const;
  std::size_t degree(Vertex v) const { return incident_edges(v).size(); }

  // d_H(S): number of edges containing every vertex of S.
  std::size_t set_degree(std::span<const Vertex> s) const;
  std::size_t set_degree(std::initializer_list<Vertex> s) const {
    return set_degree(std::span<const Vertex>(s.begin(), s.size()));
  }

  bool has_edge(std::span<const Vertex> e) const;
  bool has_edge(std::initializer_list<Vertex> e) const {
    return has_edge(std::span<const Vertex>(e.begin(), e.size()));
  }

  // 3-uniform only. {w : {u,v,w} is an edge}. O(1) lookup of a precomputed set.
  const VertexSet& pair_neighborhood(Vertex u, Vertex v) const;
  // 3-uniform only. |pair_neighborhood(u, v)|.
  std::size_t codegree(Vertex u, Vertex v) const { return pair_neighborhood(u, v).size(); }
  // 3-uniform only. The pairs {a,b} (a<b) with {v,a,b} an edge, lexicographic.
  std::span<const std::array<Vertex, 2>> link(Vertex v) const;

  // δ_1(H); isolated vertices count as degree 0.
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.flat_ == b.flat_;
  }

 private:
  Hypergraph() = default;
  void check_vertex(Vertex v) const;
  void require_pair_uniform() const;

  int r_ = 0;
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<Vertex> flat_;                      // edge_count_ * r_, lexicographic
  std::vector<std::uint32_t> incidence_offsets_;  // n_ + 1
  std::vector<std::uint32_t> incidence_;

  // 3-uniform indices.
  std::vector<std::array<Vertex, 2>> link_;         // grouped per vertex, same offsets as incidence_
  std::vector<std::int32_t> pair_slot_;             // n_*n_, -1 when the codegree is 0
  std::vector<VertexSet> pair_sets_;
  VertexSet empty_set_;
};

}  // namespace hyperpath
