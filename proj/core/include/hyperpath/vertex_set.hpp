#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace hyperpath {

using Vertex = std::uint32_t;

// Set of vertex labels drawn from [0, universe). Backed by a bitset so that
// membership, difference and intersection counts are word-parallel; iteration
// is always in increasing label order.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  template <typename Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  void insert(Vertex v);
  void erase(Vertex v);
  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }

  std::size_t size() const noexcept;
  bool empty() const noexcept;

  std::size_t intersection_size(const VertexSet& other) const;
  // |*this \ other|
  std::size_t difference_size(const VertexSet& other) const;
  VertexSet difference(const VertexSet& other) const;

  std::optional<Vertex> first() const;
  std::vector<Vertex> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  // Calls f on members not in `excluded`, in increasing order; stops early
  // when f returns true. Returns whether it stopped early.
  template <typename F>
  bool for_each_outside(const VertexSet& excluded, F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      if (w < excluded.words_.size()) bits &= ~excluded.words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        if (f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)))) return true;
        bits &= bits - 1;
      }
    }
    return false;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hyperpath
