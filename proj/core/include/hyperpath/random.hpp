#pragma once

#include <cstdint>
#include <random>

namespace hyperpath {

std::uint64_t splitmix64(std::uint64_t x);

// Independent stream seed for `stream` under a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// mt19937_64 is fully specified by the standard; the distributions below are
// written out by hand so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, bound), bound > 0, rejection-sampled.
  std::uint64_t below(std::uint64_t bound);
  // Uniform on [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hyperpath
