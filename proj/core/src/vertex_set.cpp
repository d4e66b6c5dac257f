#include "hyperpath/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "hyperpath/error.hpp"

namespace hyperpath {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside universe of size " +
                    std::to_string(universe_));
  }
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  std::size_t total = 0;
  const std::size_t common = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < common; ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

std::size_t VertexSet::difference_size(const VertexSet& other) const {
  return size() - intersection_size(other);
}

VertexSet VertexSet::difference(const VertexSet& other) const {
  VertexSet out = *this;
  const std::size_t common = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < common; ++i) out.words_[i] &= ~other.words_[i];
  return out;
}

std::optional<Vertex> VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
  }
  return std::nullopt;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

}  // namespace hyperpath
