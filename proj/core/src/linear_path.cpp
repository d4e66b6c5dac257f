#include "hyperpath/linear_path.hpp"

#include <algorithm>

#include "hyperpath/error.hpp"

namespace hyperpath {

namespace {

bool all_distinct(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

bool all_below(std::span<const Vertex> v, int n) {
  return std::all_of(v.begin(), v.end(), [n](Vertex x) { return x < static_cast<Vertex>(n); });
}

}  // namespace

LinearPath::LinearPath(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3 || vertices_.size() % 2 == 0) {
    throw Error(ErrorCode::InvalidPath,
                "a linear path needs 2t+1 >= 3 vertices, got " + std::to_string(vertices_.size()));
  }
}

LinearPath LinearPath::reversed() const {
  return LinearPath(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()));
}

LinearPath LinearPath::prefix(std::size_t t) const {
  if (t < 1 || t > length()) throw Error(ErrorCode::InvalidPath, "prefix length out of range");
  return LinearPath(std::vector<Vertex>(vertices_.begin(),
                                        vertices_.begin() + static_cast<std::ptrdiff_t>(2 * t + 1)));
}

std::vector<Vertex> CyclePlusWitness::cycle_vertices() const {
  std::vector<Vertex> out(path.vertices().begin(), path.vertices().end());
  out.push_back(closing);
  return out;
}

bool is_valid_path(const Hypergraph& h, const LinearPath& p) {
  if (h.uniformity() != 3) return false;
  const auto v = p.vertices();
  if (!all_below(v, h.order())) return false;
  if (!all_distinct({v.begin(), v.end()})) return false;
  for (std::size_t i = 0; i < p.length(); ++i) {
    const auto e = p.edge(i);
    if (!h.has_edge(e)) return false;
  }
  return true;
}

bool is_valid_cycle(const Hypergraph& h, const LinearCycle& c) {
  if (h.uniformity() != 3) return false;
  const auto& z = c.vertices;
  if (z.size() < 6 || z.size() % 2 != 0) return false;
  if (!all_below(z, h.order()) || !all_distinct(z)) return false;
  const std::size_t m = z.size();
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (!h.has_edge({z[2 * i], z[2 * i + 1], z[(2 * i + 2) % m]})) return false;
  }
  return true;
}

bool is_valid_cycle_plus(const Hypergraph& h, const CyclePlusWitness& w) {
  if (!is_valid_path(h, w.path)) return false;
  std::vector<Vertex> all = w.cycle_vertices();
  all.push_back(w.parallel);
  if (!all_below(all, h.order()) || !all_distinct(all)) return false;
  // The closed cycle needs at least three edges.
  if (w.cycle_length() < 3) return false;
  return h.has_edge({w.path.back(), w.closing, w.path.front()}) &&
         h.has_edge({w.path.back(), w.parallel, w.path.front()});
}

void require_valid_path(const Hypergraph& h, const LinearPath& p) {
  if (!is_valid_path(h, p)) {
    throw Error(ErrorCode::InvalidPath, "(" + format_vertices(p.vertices(), false) +
                                            ") is not a linear path of the host hypergraph");
  }
}

std::string format_vertices(std::span<const Vertex> vertices, bool one_based) {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vertices[i] + (one_based ? 1 : 0));
  }
  return out;
}

}  // namespace hyperpath
