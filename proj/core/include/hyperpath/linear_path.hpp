#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hyperpath/hypergraph.hpp"

namespace hyperpath {

// Linear path (x_0, x_1, ..., x_{2t}) of length t >= 1 in a 3-graph; its
// edges are {x_{2i}, x_{2i+1}, x_{2i+2}}. The constructor only checks the
// shape (odd length >= 3); membership in a host hypergraph is checked by
// is_valid_path().
class LinearPath {
 public:
  explicit LinearPath(std::vector<Vertex> vertices);

  std::size_t length() const noexcept { return (vertices_.size() - 1) / 2; }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  std::array<Vertex, 3> edge(std::size_t i) const {
    return {vertices_[2 * i], vertices_[2 * i + 1], vertices_[2 * i + 2]};
  }

  // Index reflection i -> 2t - i.
  LinearPath reversed() const;
  // The first t edges.
  LinearPath prefix(std::size_t t) const;

  friend bool operator==(const LinearPath&, const LinearPath&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// Cyclic sequence z_0..z_{2k-1}; edges {z_{2i}, z_{2i+1}, z_{2i+2 mod 2k}}.
struct LinearCycle {
  std::vector<Vertex> vertices;
  std::size_t length() const noexcept { return vertices.size() / 2; }
  friend bool operator==(const LinearCycle&, const LinearCycle&) = default;
};

// C_{t+1}^+ as a linear t-path x_0..x_{2t}, a closing vertex x_{2t+1} with
// {x_{2t}, x_{2t+1}, x_0} an edge, and a parallel vertex v with
// {x_{2t}, v, x_0} an edge.
struct CyclePlusWitness {
  LinearPath path;
  Vertex closing;
  Vertex parallel;

  // Length of the underlying cycle.
  std::size_t cycle_length() const noexcept { return path.length() + 1; }
  // x_0, ..., x_{2t}, x_{2t+1} in cyclic order.
  std::vector<Vertex> cycle_vertices() const;
  friend bool operator==(const CyclePlusWitness&, const CyclePlusWitness&) = default;
};

bool is_valid_path(const Hypergraph& h, const LinearPath& p);
bool is_valid_cycle(const Hypergraph& h, const LinearCycle& c);
bool is_valid_cycle_plus(const Hypergraph& h, const CyclePlusWitness& w);

// Throws Error{InvalidPath} unless is_valid_path(h, p).
void require_valid_path(const Hypergraph& h, const LinearPath& p);

// Vertex labels, space separated; one_based adds 1 to each label.
std::string format_vertices(std::span<const Vertex> vertices, bool one_based = true);

}  // namespace hyperpath
