#include "hyperpath/random.hpp"

namespace hyperpath {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // 2^64 mod bound leading values are rejected so every residue is equally likely.
  const std::uint64_t skip = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = next();
    if (x >= skip) return x % bound;
  }
}

}  // namespace hyperpath
