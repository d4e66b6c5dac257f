#include "hyperpath/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "hyperpath/error.hpp"

namespace hyperpath {

namespace {

std::string describe(const Edge& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

}  // namespace

Hypergraph Hypergraph::build(int r, int n, const std::vector<Edge>& edges) {
  if (r < 2 || n < r) {
    throw Error(ErrorCode::InvalidParameter,
                "need n >= r >= 2, got r=" + std::to_string(r) + " n=" + std::to_string(n));
  }
  const auto ur = static_cast<std::size_t>(r);
  const auto un = static_cast<std::size_t>(n);

  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.size() != ur) {
      throw Error(ErrorCode::EdgeArity, "edge " + describe(raw) + " has " +
                                            std::to_string(raw.size()) + " vertices, expected " +
                                            std::to_string(r));
    }
    Edge e = raw;
    std::sort(e.begin(), e.end());
    for (Vertex v : e) {
      if (v >= un) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "edge " + describe(raw) + " uses vertex " + std::to_string(v));
      }
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorCode::RepeatedVertexInEdge, "edge " + describe(raw));
    }
    sorted.push_back(std::move(e));
  }
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw Error(ErrorCode::DuplicateEdge, "edge " + describe(*dup) + " given twice");
  }

  Hypergraph h;
  h.r_ = r;
  h.n_ = n;
  h.edge_count_ = sorted.size();
  h.flat_.reserve(sorted.size() * ur);
  for (const Edge& e : sorted) h.flat_.insert(h.flat_.end(), e.begin(), e.end());

  std::vector<std::uint32_t> counts(un, 0);
  for (Vertex v : h.flat_) ++counts[v];
  h.incidence_offsets_.assign(un + 1, 0);
  for (std::size_t v = 0; v < un; ++v) {
    h.incidence_offsets_[v + 1] = h.incidence_offsets_[v] + counts[v];
  }
  h.incidence_.resize(h.flat_.size());
  std::vector<std::uint32_t> cursor(h.incidence_offsets_.begin(), h.incidence_offsets_.end() - 1);
  for (std::size_t i = 0; i < h.edge_count_; ++i) {
    for (Vertex v : h.edge(i)) h.incidence_[cursor[v]++] = static_cast<std::uint32_t>(i);
  }

  if (r == 3) {
    h.empty_set_ = VertexSet(un);
    h.link_.resize(h.incidence_.size());
    h.pair_slot_.assign(un * un, -1);
    for (std::size_t v = 0; v < un; ++v) {
      for (std::uint32_t k = h.incidence_offsets_[v]; k < h.incidence_offsets_[v + 1]; ++k) {
        std::array<Vertex, 2> pair{};
        std::size_t j = 0;
        for (Vertex w : h.edge(h.incidence_[k])) {
          if (w != v) pair[j++] = w;
        }
        h.link_[k] = pair;
      }
      std::sort(h.link_.begin() + h.incidence_offsets_[v],
                h.link_.begin() + h.incidence_offsets_[v + 1]);
    }
    for (std::size_t i = 0; i < h.edge_count_; ++i) {
      auto e = h.edge(i);
      const std::array<std::array<std::size_t, 3>, 3> roles{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
      for (const auto& role : roles) {
        const Vertex a = e[role[0]];
        const Vertex b = e[role[1]];
        const Vertex c = e[role[2]];
        std::int32_t& slot = h.pair_slot_[a * un + b];
        if (slot < 0) {
          slot = static_cast<std::int32_t>(h.pair_sets_.size());
          h.pair_slot_[b * un + a] = slot;
          h.pair_sets_.emplace_back(un);
        }
        h.pair_sets_[static_cast<std::size_t>(slot)].insert(c);
      }
    }
  }
  return h;
}

std::vector<Edge> Hypergraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < edge_count_; ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

void Hypergraph::check_vertex(Vertex v) const {
  if (v >= static_cast<Vertex>(n_)) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " in hypergraph of order " + std::to_string(n_));
  }
}

void Hypergraph::require_pair_uniform() const {
  if (r_ != 3) {
    throw Error(ErrorCode::NotPairUniform,
                "pair queries need a 3-graph, this one has r=" + std::to_string(r_));
  }
}

std::span<const std::uint32_t> Hypergraph::incident_edges(Vertex v) const {
  check_vertex(v);
  return {incidence_.data() + incidence_offsets_[v],
          incidence_offsets_[v + 1] - incidence_offsets_[v]};
}

std::size_t Hypergraph::set_degree(std::span<const Vertex> s) const {
  for (Vertex v : s) check_vertex(v);
  if (s.size() > static_cast<std::size_t>(r_)) {
    throw Error(ErrorCode::InvalidParameter,
                "set of size " + std::to_string(s.size()) + " exceeds uniformity");
  }
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidParameter, "set has a repeated vertex");
  }
  if (sorted.empty()) return edge_count_;
  if (sorted.size() == 2 && r_ == 3) return codegree(sorted[0], sorted[1]);

  Vertex pivot = sorted.front();
  for (Vertex v : sorted) {
    if (degree(v) < degree(pivot)) pivot = v;
  }
  std::size_t count = 0;
  for (std::uint32_t idx : incident_edges(pivot)) {
    auto e = edge(idx);
    if (std::includes(e.begin(), e.end(), sorted.begin(), sorted.end())) ++count;
  }
  return count;
}

bool Hypergraph::has_edge(std::span<const Vertex> e) const {
  if (e.size() != static_cast<std::size_t>(r_)) return false;
  for (Vertex v : e) {
    if (v >= static_cast<Vertex>(n_)) return false;
  }
  if (r_ == 3) {
    if (e[0] == e[1] || e[0] == e[2] || e[1] == e[2]) return false;
    return pair_neighborhood(e[0], e[1]).contains(e[2]);
  }
  std::vector<Vertex> sorted(e.begin(), e.end());
  std::sort(sorted.begin(), sorted.end());
  const auto ur = static_cast<std::size_t>(r_);
  std::size_t lo = 0;
  std::size_t hi = edge_count_;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto m = edge(mid);
    if (std::lexicographical_compare(m.begin(), m.end(), sorted.begin(), sorted.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo < edge_count_ && std::equal(sorted.begin(), sorted.end(), flat_.begin() + lo * ur);
}

const VertexSet& Hypergraph::pair_neighborhood(Vertex u, Vertex v) const {
  require_pair_uniform();
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorCode::InvalidParameter, "pair neighborhood needs u != v");
  const std::int32_t slot = pair_slot_[u * static_cast<std::size_t>(n_) + v];
  return slot < 0 ? empty_set_ : pair_sets_[static_cast<std::size_t>(slot)];
}

std::span<const std::array<Vertex, 2>> Hypergraph::link(Vertex v) const {
  require_pair_uniform();
  check_vertex(v);
  return {link_.data() + incidence_offsets_[v],
          incidence_offsets_[v + 1] - incidence_offsets_[v]};
}

std::size_t Hypergraph::min_degree() const {
  std::size_t best = edge_count_ + 1;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(static_cast<Vertex>(v)));
  return n_ == 0 ? 0 : best;
}

std::size_t Hypergraph::max_degree() const {
  std::size_t best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

}  // namespace hyperpath
